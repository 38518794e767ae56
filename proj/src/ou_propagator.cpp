#include <algorithm>
#include <cmath>
#include <numbers>

#include "catdeco/evolution_numeric.hpp"

namespace catdeco {

namespace {

// Largest |coordinate| along one axis where the field is still above rel * peak.
struct Support {
    double x = 0.0;
    double y = 0.0;
};

Support field_support(const RealField& f, double rel) {
    const double peak = f.values.cwiseAbs().maxCoeff();
    Support s;
    if (peak == 0.0) return s;
    for (int j = 0; j < f.spec.ny; ++j) {
        for (int i = 0; i < f.spec.nx; ++i) {
            if (std::abs(f.values(j, i)) > rel * peak) {
                s.x = std::max(s.x, std::abs(f.spec.x(i)));
                s.y = std::max(s.y, std::abs(f.spec.y(j)));
            }
        }
    }
    return s;
}

// M(i, j) = w_j K(s_i | s_j) with K the OU transition density along one axis.
Eigen::MatrixXd transition_matrix(int n, double s_min, double h, double contraction, double variance) {
    const Eigen::VectorXd w = trapezoid_weights(n, h);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * variance);
    Eigen::MatrixXd m(n, n);
    for (int j = 0; j < n; ++j) {
        const double mean = (s_min + j * h) * contraction;
        for (int i = 0; i < n; ++i) {
            const double d = s_min + i * h - mean;
            m(i, j) = w[j] * norm * std::exp(-d * d / (2.0 * variance));
        }
    }
    return m;
}

}  // namespace

EnvironmentModel::EnvironmentModel(double kappa_, double gamma_) : kappa(kappa_), gamma(gamma_) {
    if (!(kappa >= 0.0) || !(gamma >= 0.0)) throw Error("kappa and gamma must be non-negative");
}

EnvironmentModel EnvironmentModel::thermal(double kappa, double nbar) {
    if (!(nbar >= 0.0)) throw Error("thermal occupation must be non-negative");
    return {kappa, kappa * nbar / (nbar + 1.0)};
}

double EnvironmentModel::thermal_nbar() const {
    if (!(gamma < kappa)) throw Error("thermal occupation requires gamma < kappa");
    return gamma / (kappa - gamma);
}

double ou_variance(const EnvironmentModel& env, double t) {
    const double lambda = env.drift();
    const double d = env.diffusion();
    const double x = 2.0 * lambda * t;
    if (std::abs(x) < 1e-8) return 2.0 * d * t * (1.0 - 0.5 * x);
    return (d / lambda) * (-std::expm1(-x));
}

RealField ou_propagate(const RealField& f, const EnvironmentModel& env, double t) {
    if (!(t >= 0.0)) throw Error("propagation time must be non-negative");
    const GridSpec& g = f.spec;
    g.validate();
    const double variance = ou_variance(env, t);
    if (t == 0.0 || (variance == 0.0 && env.drift() == 0.0)) return f;

    const double lambda = env.drift();
    const double contraction = std::exp(-lambda * t);
    const double sigma = std::sqrt(variance);
    if (lambda < 0.0) {
        const Support s = field_support(f, 1e-10);
        const double reach_x = s.x * contraction + 5.0 * sigma;
        const double reach_y = s.y * contraction + 5.0 * sigma;
        if (reach_x > std::min(-g.x_min, g.x_max) || reach_y > std::min(-g.y_min, g.y_max)) {
            throw Error("support escapes grid");
        }
    }
    // As a function of the source point the kernel has width sigma / contraction.
    if (sigma / contraction < std::max(g.dx(), g.dy())) throw Error("kernel underresolved");

    const Eigen::MatrixXd mx = transition_matrix(g.nx, g.x_min, g.dx(), contraction, variance);
    const Eigen::MatrixXd my = transition_matrix(g.ny, g.y_min, g.dy(), contraction, variance);
    return RealField(g, my * f.values * mx.transpose());
}

}  // namespace catdeco
