#include "catdeco/states.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace catdeco {

namespace {

constexpr double kTailLimit = 1e-12;
constexpr int kTailWindow = 5;

// Exact (untruncated) cat amplitude at level n.
double cat_amplitude(const CatState& c, int n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double interference = 1.0 + parity_sign(c.parity) * sign;
    if (interference == 0.0) return 0.0;
    const double log_mag = n * std::log(c.beta) - 0.5 * std::lgamma(n + 1.0) - 0.5 * c.beta * c.beta;
    return std::sqrt(cat_normalization(c)) * interference * std::exp(log_mag);
}

double window_population(const Eigen::VectorXcd& psi, int cutoff) {
    double pop = 0.0;
    for (int n = std::max(0, cutoff - kTailWindow + 1); n <= cutoff; ++n) pop += std::norm(psi[n]);
    return pop;
}

}  // namespace

CatState::CatState(double beta_, Parity parity_) : beta(beta_), parity(parity_) {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw Error("cat amplitude beta must be real and positive");
}

FockDensityMatrix::FockDensityMatrix(Eigen::MatrixXcd r) : rho(std::move(r)) {
    if (rho.rows() != rho.cols() || rho.rows() < 1) throw Error("density matrix must be square");
    cutoff = static_cast<int>(rho.rows()) - 1;
}

double FockDensityMatrix::mean_photon() const {
    double n = 0.0;
    for (int k = 0; k <= cutoff; ++k) n += k * rho(k, k).real();
    return n;
}

double FockDensityMatrix::top_population(int levels) const {
    double pop = 0.0;
    for (int k = std::max(0, cutoff - levels + 1); k <= cutoff; ++k) pop += rho(k, k).real();
    return pop;
}

FockDensityMatrix FockDensityMatrix::vacuum(int cutoff) { return number_state(0, cutoff); }

FockDensityMatrix FockDensityMatrix::number_state(int n, int cutoff) {
    if (n < 0 || n > cutoff) throw Error("number state outside truncated basis");
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
    r(n, n) = 1.0;
    return FockDensityMatrix(std::move(r));
}

FockDensityMatrix FockDensityMatrix::maximally_mixed(int cutoff) {
    return FockDensityMatrix(Eigen::MatrixXcd::Identity(cutoff + 1, cutoff + 1) / static_cast<double>(cutoff + 1));
}

FockDensityMatrix FockDensityMatrix::pure(const Eigen::VectorXcd& psi) {
    const Eigen::VectorXcd unit = psi / psi.norm();
    return FockDensityMatrix(unit * unit.adjoint());
}

double cat_normalization(const CatState& c) {
    return 1.0 / (2.0 * (1.0 + parity_sign(c.parity) * std::exp(-2.0 * c.beta * c.beta)));
}

void check_fringe_resolution(const GridSpec& g, double wavenumber) {
    if (wavenumber <= 0.0) return;
    const double period = 2.0 * std::numbers::pi / wavenumber;
    if (g.dy() > period / 8.0) throw Error("grid underresolves fringes");
}

RealField cat_wigner(const CatState& c, const GridSpec& g, SampleOptions opt) {
    g.validate();
    if (opt.check_fringes) check_fringe_resolution(g, 4.0 * c.beta);
    const double pref = 2.0 * cat_normalization(c) / std::numbers::pi;
    const double s = parity_sign(c.parity);
    const double b = c.beta;
    return RealField::sample(g, [=](double x, double y) {
        const double y2 = y * y;
        return pref * (std::exp(-2.0 * ((x - b) * (x - b) + y2)) + std::exp(-2.0 * ((x + b) * (x + b) + y2)) +
                       s * 2.0 * std::exp(-2.0 * (x * x + y2)) * std::cos(4.0 * b * y));
    });
}

RealField vacuum_wigner(const GridSpec& g) { return coherent_wigner(0.0, g); }

RealField coherent_wigner(cplx alpha0, const GridSpec& g) {
    const double x0 = alpha0.real(), y0 = alpha0.imag();
    return RealField::sample(g, [=](double x, double y) {
        return (2.0 / std::numbers::pi) * std::exp(-2.0 * ((x - x0) * (x - x0) + (y - y0) * (y - y0)));
    });
}

namespace {

// Number distribution of |beta> after pure diffusion for delta: a displaced thermal
// state with nbar = delta, P(n) = nbar^n / (1+nbar)^{n+1} e^{-beta^2/(1+nbar)} L_n(-beta^2 / (nbar (1+nbar))).
// Laguerre values at negative argument are all positive, so the recurrence is run with a rescaled log.
std::vector<double> diffused_populations(double beta, double delta, int n_max) {
    const double b2 = beta * beta;
    const double z = b2 / (delta * (1.0 + delta));
    const double base = -b2 / (1.0 + delta) - std::log1p(delta);
    std::vector<double> p(n_max + 1);
    double l_prev = 0.0, l = 1.0, log_scale = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        p[n] = std::exp(base + n * (std::log(delta) - std::log1p(delta)) + std::log(l) + log_scale);
        const double l_next = ((2.0 * n + 1.0 + z) * l - n * l_prev) / (n + 1.0);
        l_prev = l;
        l = l_next;
        if (l > 1e200) {
            l /= 1e200;
            l_prev /= 1e200;
            log_scale += std::log(1e200);
        }
    }
    return p;
}

}  // namespace

int default_cutoff(const CatState& c, double delta_max) {
    int cutoff = static_cast<int>(std::ceil(c.beta * c.beta + 6.0 * c.beta + 10.0 + 2.0 * delta_max));
    for (;; ++cutoff) {
        double pop = 0.0;
        for (int n = std::max(0, cutoff - kTailWindow + 1); n <= cutoff; ++n) pop += cat_amplitude(c, n) * cat_amplitude(c, n);
        double tail = 0.0;
        for (int n = cutoff + 1; n <= cutoff + 400; ++n) tail += cat_amplitude(c, n) * cat_amplitude(c, n);
        if (pop < kTailLimit && tail < kTailLimit) break;
    }
    if (delta_max <= 0.0) return cutoff;

    // Gain spreads the number distribution geometrically; keep the diffused top levels
    // (and everything above) two decades under the saturation threshold. 4 N^2 bounds
    // the cat's populations by those of one component.
    const double weight = 4.0 * cat_normalization(c);
    const int n_max = cutoff + 200 + static_cast<int>(40.0 * delta_max);
    const std::vector<double> p = diffused_populations(c.beta, delta_max, n_max);
    std::vector<double> above(n_max + 2, 0.0);
    for (int n = n_max; n >= 0; --n) above[n] = above[n + 1] + p[n];
    while (cutoff < n_max && weight * above[cutoff - 1] >= 1e-10) ++cutoff;
    return cutoff;
}

Eigen::VectorXcd cat_fock_vector(const CatState& c, int cutoff) {
    if (cutoff < 1) throw Error("cutoff too small");
    Eigen::VectorXcd psi(cutoff + 1);
    double kept = 0.0;
    for (int n = 0; n <= cutoff; ++n) {
        psi[n] = cat_amplitude(c, n);
        kept += std::norm(psi[n]);
    }
    // The full expansion has unit norm, so 1 - kept is the discarded tail.
    if (1.0 - kept > kTailLimit) throw Error("cutoff too small");
    return psi / std::sqrt(kept);
}

Eigen::VectorXcd coherent_fock_vector(cplx amplitude, int cutoff) {
    Eigen::VectorXcd v(cutoff + 1);
    v[0] = std::exp(-0.5 * std::norm(amplitude));
    for (int n = 1; n <= cutoff; ++n) v[n] = v[n - 1] * amplitude / std::sqrt(static_cast<double>(n));
    return v;
}

FockDensityMatrix cat_density_matrix(const CatState& c, int cutoff) {
    const Eigen::VectorXcd psi = cat_fock_vector(c, cutoff);
    if (window_population(psi, cutoff) >= kTailLimit) throw Error("cutoff too small");
    return FockDensityMatrix(psi * psi.adjoint());
}

}  // namespace catdeco
