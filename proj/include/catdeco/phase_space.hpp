#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "catdeco/error.hpp"

namespace catdeco {

using cplx = std::complex<double>;

/**
 * Closed-endpoint uniform rectangular grid on the complex plane, alpha = x + i y.
 *
 * Sample j along x sits at x_min + j*dx with dx = (x_max - x_min)/(nx - 1), so
 * both endpoints are sampled. The same grid type describes the conjugate
 * gamma = u + i v plane of a characteristic function (x <-> u, y <-> v).
 */
struct GridSpec {
    double x_min = -1.0, x_max = 1.0;
    double y_min = -1.0, y_max = 1.0;
    int nx = 2, ny = 2;

    static GridSpec square(double half_width, int n);

    // Throws Error("grid too small") or Error("invalid grid extent").
    void validate() const;

    double dx() const { return (x_max - x_min) / (nx - 1); }
    double dy() const { return (y_max - y_min) / (ny - 1); }
    double x(int i) const { return x_min + i * dx(); }
    double y(int j) const { return y_min + j * dy(); }

    // Equality up to a relative tolerance on the extents; counts must match.
    bool matches(const GridSpec& other, double rel_tol = 1e-12) const;
};

/// Sampled real function on a GridSpec. values(j, i) holds f(x_i, y_j).
struct RealField {
    GridSpec spec;
    Eigen::MatrixXd values;  // ny rows x nx columns

    RealField() = default;
    explicit RealField(const GridSpec& g);
    RealField(const GridSpec& g, Eigen::MatrixXd v);

    static RealField sample(const GridSpec& g, const std::function<double(double, double)>& f);

    double at(int ix, int iy) const { return values(iy, ix); }
    double& at(int ix, int iy) { return values(iy, ix); }
};

/**
 * Sampled characteristic function chi(gamma) on the conjugate gamma-grid.
 *
 * values(jv, iu) holds chi(u_iu + i v_jv). `alpha` remembers the grid the
 * field was transformed from; it fixes the phase reference used by idft.
 */
struct ComplexField {
    GridSpec spec;   // gamma plane: x <-> u, y <-> v
    GridSpec alpha;  // source alpha-plane grid
    Eigen::MatrixXcd values;

    double u(int iu) const { return spec.x(iu); }
    double v(int jv) const { return spec.y(jv); }
    cplx at(int iu, int jv) const { return values(jv, iu); }
    // Grid indices of gamma = 0.
    int zero_u_index() const;
    int zero_v_index() const;
};

struct ErrorReport {
    double max_abs = 0.0;
    double l2 = 0.0;  // sqrt of the trapezoidal integral of (a - b)^2
    double x_at_max = 0.0;
    double y_at_max = 0.0;
};

/// Trapezoidal weights along one axis, closed endpoints.
Eigen::VectorXd trapezoid_weights(int n, double h);

double integrate(const RealField& f);

/// Integral of x^px y^py f over the grid, same quadrature as integrate().
double moment(const RealField& f, int px, int py);

/// <a^dagger a> from a Wigner function: integral of |alpha|^2 W minus 1/2.
double mean_photon_from_wigner(const RealField& w);

/// pi * integral of W^2, the purity Tr(rho^2) of the state with Wigner function W.
double purity_from_wigner(const RealField& w);

/// True when |f| on the outermost ring exceeds rel * max|f|.
bool boundary_leaks(const RealField& f, double rel = 1e-8);

/**
 * chi(gamma) = integral of f(alpha) exp(gamma alpha* - gamma* alpha) d^2 alpha.
 *
 * With gamma = u + i v the kernel is exp(i(2v x - 2u y)). The gamma-grid has
 * ny_alpha samples along u and nx_alpha along v:
 *   v_k =  pi k / (nx dx),  k = -floor(nx/2) .. nx-1-floor(nx/2)
 *   u_l = -pi l / (ny dy),  l = -floor(ny/2) .. ny-1-floor(ny/2)  (stored with u ascending)
 * The sums carry trapezoidal weights, so chi(0) == integrate(f).
 * A "boundary leakage" warning is pushed to `diag` when boundary_leaks(f).
 */
ComplexField dft(const RealField& f, Diagnostics* diag = nullptr);

/// Exact discrete inverse of dft(). Throws Error("non-Hermitian input") when
/// chi(-gamma) != conj(chi(gamma)) beyond 1e-8 * max(1, max|chi|).
RealField idft(const ComplexField& c);

/// Throws Error("grid mismatch") unless a.spec matches b.spec.
ErrorReport compare(const RealField& a, const RealField& b);

struct GaussianIdentityResult {
    cplx numeric;
    cplx analytic;
};

/**
 * Quadrature self-test: integral over the plane of exp(a z + b z* - g |z|^2) d^2z / pi
 * against the closed form exp(a b / g) / g. Throws Error("divergent integrand")
 * when Re(g) <= 0.
 */
GaussianIdentityResult gaussian_identity_check(cplx a, cplx b, cplx g,
                                               const GridSpec& grid = GridSpec::square(6.0, 256));

}  // namespace catdeco
