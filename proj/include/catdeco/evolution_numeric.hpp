#pragma once

#include <vector>

#include "catdeco/states.hpp"

namespace catdeco {

/**
 * Loss rate kappa (2 kappa is the dissipation rate) and gain rate gamma
 * (2 gamma is the gain). The phase-space generator has drift
 * lambda = kappa - gamma and per-axis diffusion D = (kappa + gamma) / 4.
 */
struct EnvironmentModel {
    double kappa = 0.0;
    double gamma = 0.0;

    EnvironmentModel() = default;
    EnvironmentModel(double kappa_, double gamma_);

    static EnvironmentModel pure_loss(double kappa) { return {kappa, 0.0}; }
    static EnvironmentModel pure_diffusion(double kappa) { return {kappa, kappa}; }
    /// gamma / kappa = nbar / (nbar + 1).
    static EnvironmentModel thermal(double kappa, double nbar);

    double drift() const { return kappa - gamma; }
    double diffusion() const { return 0.25 * (kappa + gamma); }
    /// nbar = gamma / (kappa - gamma); Error unless gamma < kappa.
    double thermal_nbar() const;
};

/// Per-axis Ornstein-Uhlenbeck transition variance (D/lambda)(1 - e^{-2 lambda t}), 2 D t at lambda = 0.
double ou_variance(const EnvironmentModel& env, double t);

/**
 * Exact solution of the Fokker-Planck equation by Green's-function quadrature.
 *
 * Each axis uses the Gaussian transition kernel with mean x0 e^{-lambda t} and
 * variance ou_variance(); the 2D result is two separable trapezoidal passes
 * over the source grid, evaluated back on the same grid. At lambda = 0 and
 * gamma = kappa this is convolution with exp(-|alpha - alpha0|^2/delta)/(pi delta),
 * delta = 2 kappa t.
 *
 * Throws Error("support escapes grid") when net gain (lambda < 0) carries the
 * source support past the grid edge, and Error("kernel underresolved") when the
 * kernel is narrower than the grid spacing for t > 0.
 */
RealField ou_propagate(const RealField& f, const EnvironmentModel& env, double t);

struct FDSolverConfig {
    double safety = 0.8;
    double t_end = 0.0;
    std::vector<double> snapshots;  // empty: single snapshot at t_end
};

/// Explicit step size: safety * min(dx^2 / (4 D), dx / (|lambda| max|x|)).
double fd_stable_step(const GridSpec& g, const EnvironmentModel& env, double safety);

/**
 * Explicit FTCS integration of the drift-diffusion equation with zero
 * Dirichlet boundaries, one field per requested snapshot time.
 *
 * Throws Error("unstable step") for a safety factor outside (0, 1] and
 * Error("boundary leakage exceeded") once more than 1e-5 of the initial mass
 * has been lost.
 */
std::vector<RealField> fd_evolve(const RealField& f, const EnvironmentModel& env, const FDSolverConfig& cfg);

/// d rho / dt = -kappa (a+a rho - 2 a rho a+ + rho a+a) - gamma (a a+ rho - 2 a+ rho a + rho a a+)
/// with ladder operators truncated at the cutoff.
Eigen::MatrixXcd lindblad_rhs(const FockDensityMatrix& rho, const EnvironmentModel& env);

/// Largest RK4 step allowed: 0.05 / ((kappa + gamma)(cutoff + 1)).
double lindblad_max_step(const EnvironmentModel& env, int cutoff);

/**
 * Fixed-step RK4 integration of the master equation. Each snapshot is checked
 * for Hermiticity (1e-10) and trace (1e-8); Error("cutoff saturated") when the
 * two highest levels hold 1e-8 or more population.
 */
std::vector<FockDensityMatrix> lindblad_evolve(const FockDensityMatrix& rho, const EnvironmentModel& env,
                                               double t_end, const std::vector<double>& snapshots = {});

/**
 * Wigner function of a truncated density matrix from the closed-form Wigner
 * transform of |m><n| (associated Laguerre form), evaluated with a normalized
 * three-term recurrence.
 */
RealField wigner_from_rho(const FockDensityMatrix& rho, const GridSpec& g);

/// Husimi function <alpha|rho|alpha> / pi.
RealField q_from_rho(const FockDensityMatrix& rho, const GridSpec& g);

double purity(const FockDensityMatrix& rho);

}  // namespace catdeco
