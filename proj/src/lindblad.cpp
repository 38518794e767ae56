#include <algorithm>
#include <cmath>

#include "catdeco/evolution_numeric.hpp"

namespace catdeco {

namespace {

constexpr double kSaturation = 1e-8;

void check_snapshot(const FockDensityMatrix& r) {
    if (r.hermiticity_error() > 1e-10) throw Error("density matrix lost Hermiticity");
    if (std::abs(r.trace() - 1.0) > 1e-8) throw Error("density matrix lost trace");
    if (r.top_population(2) >= kSaturation) throw Error("cutoff saturated");
}

}  // namespace

Eigen::MatrixXcd lindblad_rhs(const FockDensityMatrix& state, const EnvironmentModel& env) {
    const int top = state.cutoff;
    const int dim = top + 1;
    const auto& rho = state.rho;
    const double kappa = env.kappa, gamma = env.gamma;
    // Diagonal of the truncated a a^dagger: n + 1 below the cutoff, 0 at it.
    auto aad = [top](int n) { return n < top ? n + 1.0 : 0.0; };

    Eigen::MatrixXcd out(dim, dim);
    for (int n = 0; n < dim; ++n) {
        for (int m = 0; m < dim; ++m) {
            cplx loss = static_cast<double>(m + n) * rho(m, n);
            if (m < top && n < top) loss -= 2.0 * std::sqrt((m + 1.0) * (n + 1.0)) * rho(m + 1, n + 1);
            cplx gain = (aad(m) + aad(n)) * rho(m, n);
            if (m > 0 && n > 0) gain -= 2.0 * std::sqrt(static_cast<double>(m) * n) * rho(m - 1, n - 1);
            out(m, n) = -kappa * loss - gamma * gain;
        }
    }
    return out;
}

double lindblad_max_step(const EnvironmentModel& env, int cutoff) {
    return 0.05 / ((env.kappa + env.gamma) * (cutoff + 1));
}

std::vector<FockDensityMatrix> lindblad_evolve(const FockDensityMatrix& rho, const EnvironmentModel& env,
                                               double t_end, const std::vector<double>& snapshots) {
    std::vector<double> targets = snapshots.empty() ? std::vector<double>{t_end} : snapshots;
    for (double t : targets) {
        if (!(t >= 0.0)) throw Error("snapshot times must be non-negative");
    }
    if (!std::is_sorted(targets.begin(), targets.end())) throw Error("snapshot times must be non-decreasing");

    std::vector<FockDensityMatrix> out;
    out.reserve(targets.size());
    if (env.kappa + env.gamma == 0.0) {
        for (std::size_t k = 0; k < targets.size(); ++k) out.push_back(rho);
        return out;
    }

    const double dt_max = lindblad_max_step(env, rho.cutoff);
    FockDensityMatrix cur = rho;
    FockDensityMatrix stage = rho;
    double t = 0.0;
    for (double target : targets) {
        const double span = target - t;
        if (span > 0.0) {
            const long steps = static_cast<long>(std::ceil(span / dt_max - 1e-12));
            const double h = span / static_cast<double>(steps);
            for (long s = 0; s < steps; ++s) {
                const Eigen::MatrixXcd k1 = lindblad_rhs(cur, env);
                stage.rho = cur.rho + 0.5 * h * k1;
                const Eigen::MatrixXcd k2 = lindblad_rhs(stage, env);
                stage.rho = cur.rho + 0.5 * h * k2;
                const Eigen::MatrixXcd k3 = lindblad_rhs(stage, env);
                stage.rho = cur.rho + h * k3;
                const Eigen::MatrixXcd k4 = lindblad_rhs(stage, env);
                cur.rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            }
            t = target;
            check_snapshot(cur);
        }
        out.push_back(cur);
    }
    return out;
}

double purity(const FockDensityMatrix& rho) { return (rho.rho * rho.rho).trace().real(); }

}  // namespace catdeco
