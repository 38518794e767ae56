#include <cmath>
#include <numbers>

#include "catdeco/evolution_numeric.hpp"

namespace catdeco {

namespace {

// exp(-x/2) stops being representable near this value of x = 4|alpha|^2.
constexpr double kUnderflowArgument = 1400.0;

void check_reach(const FockDensityMatrix& rho, const GridSpec& g) {
    const double rx = std::max(std::abs(g.x_min), std::abs(g.x_max));
    const double ry = std::max(std::abs(g.y_min), std::abs(g.y_max));
    const double r2 = rx * rx + ry * ry;
    // Beyond the underflow point every displaced-number overlap evaluates to zero,
    // which is only faithful while the basis cannot reach that far.
    if (4.0 * r2 > kUnderflowArgument && 2.0 * rho.cutoff >= r2) throw Error("cutoff insufficient for |alpha|");
}

}  // namespace

RealField wigner_from_rho(const FockDensityMatrix& state, const GridSpec& g) {
    g.validate();
    check_reach(state, g);
    const int dim = state.dim();

    // Signed lower-triangle coefficients (-1)^n rho(n + k, n), grouped by k.
    std::vector<std::vector<cplx>> coeff(dim);
    std::vector<std::vector<double>> up(dim), down(dim);
    for (int k = 0; k < dim; ++k) {
        const int len = dim - k;
        coeff[k].resize(len);
        up[k].resize(len);
        down[k].resize(len);
        for (int n = 0; n < len; ++n) {
            coeff[k][n] = ((n % 2 == 0) ? 1.0 : -1.0) * state.rho(n + k, n);
            up[k][n] = std::sqrt(static_cast<double>(n) * (n + k));
            down[k][n] = 1.0 / std::sqrt((n + 1.0) * (n + k + 1.0));
        }
    }
    std::vector<double> log_fact(dim);
    for (int k = 0; k < dim; ++k) log_fact[k] = 0.5 * std::lgamma(k + 1.0);

    RealField out(g);
    for (int j = 0; j < g.ny; ++j) {
        const double y = g.y(j);
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i);
            const double arg = 4.0 * (x * x + y * y);
            const cplx phase_step = (x == 0.0 && y == 0.0) ? cplx(1.0) : std::conj(cplx(x, y)) / std::hypot(x, y);
            cplx phase = 1.0;
            double total = 0.0;
            for (int k = 0; k < dim; ++k) {
                // f_n = sqrt(n!/(n+k)!) arg^{k/2} e^{-arg/2} L_n^{(k)}(arg), normalized recurrence in n.
                double f_prev = 0.0;
                double f = (arg == 0.0) ? (k == 0 ? 1.0 : 0.0)
                                        : std::exp(0.5 * k * std::log(arg) - 0.5 * arg - log_fact[k]);
                cplx acc = 0.0;
                const auto& c = coeff[k];
                const int len = dim - k;
                for (int n = 0; n < len; ++n) {
                    acc += c[n] * f;
                    const double f_next = ((2.0 * n + 1.0 + k - arg) * f - up[k][n] * f_prev) * down[k][n];
                    f_prev = f;
                    f = f_next;
                }
                total += (k == 0) ? acc.real() : 2.0 * (phase * acc).real();
                phase *= phase_step;
            }
            out.values(j, i) = (2.0 / std::numbers::pi) * total;
        }
    }
    return out;
}

RealField q_from_rho(const FockDensityMatrix& state, const GridSpec& g) {
    g.validate();
    check_reach(state, g);
    RealField out(g);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const Eigen::VectorXcd c = coherent_fock_vector(cplx(g.x(i), g.y(j)), state.cutoff);
            out.values(j, i) = (c.adjoint() * state.rho * c)(0, 0).real() / std::numbers::pi;
        }
    }
    return out;
}

}  // namespace catdeco
