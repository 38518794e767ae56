#include <algorithm>
#include <cmath>
#include <limits>

#include "catdeco/evolution_numeric.hpp"

namespace catdeco {

namespace {

constexpr double kMaxMassDrift = 1e-5;

// One forward-Euler step of the flux-form drift-diffusion operator on the interior.
void ftcs_step(const Eigen::MatrixXd& cur, Eigen::MatrixXd& next, const GridSpec& g, double lambda, double d,
               double dt) {
    const int nx = g.nx, ny = g.ny;
    const double dx = g.dx(), dy = g.dy();
    const double ax = lambda * dt / (2.0 * dx), ay = lambda * dt / (2.0 * dy);
    const double bx = d * dt / (dx * dx), by = d * dt / (dy * dy);
    next.setZero();
    // Column-major storage: j (y) is the fast index.
    for (int i = 1; i < nx - 1; ++i) {
        const double xl = g.x(i - 1), xr = g.x(i + 1);
        for (int j = 1; j < ny - 1; ++j) {
            const double c = cur(j, i);
            const double drift = ax * (xr * cur(j, i + 1) - xl * cur(j, i - 1)) +
                                 ay * (g.y(j + 1) * cur(j + 1, i) - g.y(j - 1) * cur(j - 1, i));
            const double diff = bx * (cur(j, i + 1) - 2.0 * c + cur(j, i - 1)) +
                                by * (cur(j + 1, i) - 2.0 * c + cur(j - 1, i));
            next(j, i) = c + drift + diff;
        }
    }
}

}  // namespace

double fd_stable_step(const GridSpec& g, const EnvironmentModel& env, double safety) {
    if (!(safety > 0.0 && safety <= 1.0)) throw Error("unstable step");
    const double h = std::min(g.dx(), g.dy());
    const double d = env.diffusion();
    const double lambda = std::abs(env.drift());
    const double reach = std::max({std::abs(g.x_min), std::abs(g.x_max), std::abs(g.y_min), std::abs(g.y_max)});
    double dt = std::numeric_limits<double>::infinity();
    if (d > 0.0) dt = std::min(dt, h * h / (4.0 * d));
    if (lambda > 0.0) dt = std::min(dt, h / (lambda * reach));
    return safety * dt;
}

std::vector<RealField> fd_evolve(const RealField& f, const EnvironmentModel& env, const FDSolverConfig& cfg) {
    const GridSpec& g = f.spec;
    g.validate();
    std::vector<double> targets = cfg.snapshots.empty() ? std::vector<double>{cfg.t_end} : cfg.snapshots;
    for (double t : targets) {
        if (!(t >= 0.0)) throw Error("snapshot times must be non-negative");
    }
    if (!std::is_sorted(targets.begin(), targets.end())) throw Error("snapshot times must be non-decreasing");

    const double dt_max = fd_stable_step(g, env, cfg.safety);
    std::vector<RealField> out;
    out.reserve(targets.size());
    if (env.diffusion() == 0.0 && env.drift() == 0.0) {
        for (std::size_t k = 0; k < targets.size(); ++k) out.push_back(f);
        return out;
    }

    const double mass0 = integrate(f);
    const double tol = kMaxMassDrift * std::max(1.0, std::abs(mass0));
    Eigen::MatrixXd cur = f.values;
    Eigen::MatrixXd next(cur.rows(), cur.cols());
    double t = 0.0;
    for (double target : targets) {
        const double span = target - t;
        if (span > 0.0) {
            const long steps = static_cast<long>(std::ceil(span / dt_max - 1e-12));
            const double dt = span / static_cast<double>(steps);
            for (long s = 0; s < steps; ++s) {
                ftcs_step(cur, next, g, env.drift(), env.diffusion(), dt);
                cur.swap(next);
                if (!cur.allFinite()) throw Error("unstable step");
                if (std::abs(integrate(RealField(g, cur)) - mass0) > tol) throw Error("boundary leakage exceeded");
            }
            t = target;
        }
        out.emplace_back(g, cur);
    }
    return out;
}

}  // namespace catdeco
