#include "catdeco/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace catdeco {

namespace {

// Centered integer frequency range for n samples.
struct FreqRange {
    int lo, hi;
    explicit FreqRange(int n) : lo(-(n / 2)), hi(n - 1 - n / 2) {}
};

// Rows: frequency index (k - lo); columns: sample index. Entry w_i exp(i omega_k s_i).
Eigen::MatrixXcd forward_kernel(int n, double s_min, double h) {
    const FreqRange fr(n);
    const Eigen::VectorXd w = trapezoid_weights(n, h);
    const double base = 2.0 * std::numbers::pi / (n * h);
    Eigen::MatrixXcd k(n, n);
    for (int kk = 0; kk < n; ++kk) {
        const double omega = base * (fr.lo + kk);
        for (int i = 0; i < n; ++i) {
            k(kk, i) = w[i] * std::polar(1.0, omega * (s_min + i * h));
        }
    }
    return k;
}

// Unweighted conjugate kernel, rows: frequency index; columns: sample index.
Eigen::MatrixXcd inverse_kernel(int n, double s_min, double h) {
    const FreqRange fr(n);
    const double base = 2.0 * std::numbers::pi / (n * h);
    Eigen::MatrixXcd k(n, n);
    for (int kk = 0; kk < n; ++kk) {
        const double omega = base * (fr.lo + kk);
        for (int i = 0; i < n; ++i) {
            k(kk, i) = std::polar(1.0, -omega * (s_min + i * h));
        }
    }
    return k;
}

}  // namespace

GridSpec GridSpec::square(double half_width, int n) {
    GridSpec g{-half_width, half_width, -half_width, half_width, n, n};
    g.validate();
    return g;
}

void GridSpec::validate() const {
    if (nx < 2 || ny < 2) throw Error("grid too small");
    if (!(x_min < x_max) || !(y_min < y_max) || !std::isfinite(x_min) || !std::isfinite(x_max) ||
        !std::isfinite(y_min) || !std::isfinite(y_max)) {
        throw Error("invalid grid extent");
    }
}

bool GridSpec::matches(const GridSpec& o, double rel_tol) const {
    if (nx != o.nx || ny != o.ny) return false;
    const double scale = std::max({1.0, std::abs(x_min), std::abs(x_max), std::abs(y_min), std::abs(y_max)});
    const double tol = rel_tol * scale;
    return std::abs(x_min - o.x_min) <= tol && std::abs(x_max - o.x_max) <= tol &&
           std::abs(y_min - o.y_min) <= tol && std::abs(y_max - o.y_max) <= tol;
}

RealField::RealField(const GridSpec& g) : spec(g) {
    spec.validate();
    values = Eigen::MatrixXd::Zero(g.ny, g.nx);
}

RealField::RealField(const GridSpec& g, Eigen::MatrixXd v) : spec(g), values(std::move(v)) {
    spec.validate();
    if (values.rows() != g.ny || values.cols() != g.nx) throw Error("field shape does not match grid");
}

RealField RealField::sample(const GridSpec& g, const std::function<double(double, double)>& f) {
    RealField out(g);
    for (int j = 0; j < g.ny; ++j) {
        const double y = g.y(j);
        for (int i = 0; i < g.nx; ++i) out.values(j, i) = f(g.x(i), y);
    }
    return out;
}

int ComplexField::zero_u_index() const { return FreqRange(spec.nx).hi; }
int ComplexField::zero_v_index() const { return -FreqRange(spec.ny).lo; }

Eigen::VectorXd trapezoid_weights(int n, double h) {
    if (n < 2) throw Error("grid too small");
    Eigen::VectorXd w = Eigen::VectorXd::Constant(n, h);
    w[0] = w[n - 1] = 0.5 * h;
    return w;
}

double integrate(const RealField& f) {
    const auto& g = f.spec;
    g.validate();
    const Eigen::VectorXd wx = trapezoid_weights(g.nx, g.dx());
    const Eigen::VectorXd wy = trapezoid_weights(g.ny, g.dy());
    // Serial row-by-row accumulation keeps the reduction order fixed.
    double total = 0.0;
    for (int j = 0; j < g.ny; ++j) total += wy[j] * f.values.row(j).dot(wx.transpose());
    return total;
}

double moment(const RealField& f, int px, int py) {
    if (px < 0 || py < 0) throw Error("moment orders must be non-negative");
    const auto& g = f.spec;
    RealField weighted(g);
    for (int j = 0; j < g.ny; ++j) {
        const double yp = std::pow(g.y(j), py);
        for (int i = 0; i < g.nx; ++i) weighted.values(j, i) = std::pow(g.x(i), px) * yp * f.values(j, i);
    }
    return integrate(weighted);
}

double mean_photon_from_wigner(const RealField& w) { return moment(w, 2, 0) + moment(w, 0, 2) - 0.5; }

double purity_from_wigner(const RealField& w) {
    RealField sq(w.spec, w.values.cwiseProduct(w.values));
    return std::numbers::pi * integrate(sq);
}

bool boundary_leaks(const RealField& f, double rel) {
    const double peak = f.values.cwiseAbs().maxCoeff();
    if (peak == 0.0) return false;
    const auto& v = f.values;
    const double ring = std::max({v.row(0).cwiseAbs().maxCoeff(), v.row(v.rows() - 1).cwiseAbs().maxCoeff(),
                                  v.col(0).cwiseAbs().maxCoeff(), v.col(v.cols() - 1).cwiseAbs().maxCoeff()});
    return ring > rel * peak;
}

ComplexField dft(const RealField& f, Diagnostics* diag) {
    const auto& g = f.spec;
    g.validate();
    if (diag && boundary_leaks(f)) diag->warn("boundary leakage");

    const Eigen::MatrixXcd ex = forward_kernel(g.nx, g.x_min, g.dx());
    const Eigen::MatrixXcd ey = forward_kernel(g.ny, g.y_min, g.dy());
    // Rows: y-frequency l, columns: x-frequency k.
    const Eigen::MatrixXcd chi = ey * f.values.cast<cplx>() * ex.transpose();

    const FreqRange fk(g.nx), fl(g.ny);
    const double dv = std::numbers::pi / (g.nx * g.dx());
    const double du = std::numbers::pi / (g.ny * g.dy());

    ComplexField out;
    out.alpha = g;
    out.spec = GridSpec{-du * fl.hi, -du * fl.lo, dv * fk.lo, dv * fk.hi, g.ny, g.nx};
    // u ascending <=> l descending; v rows follow k.
    out.values = chi.colwise().reverse().transpose();
    // The zero-frequency bin is the plain quadrature; take it from integrate() so both agree bitwise.
    out.values(-fk.lo, fl.hi) = integrate(f);
    return out;
}

RealField idft(const ComplexField& c) {
    const GridSpec& g = c.alpha;
    g.validate();
    if (c.values.rows() != g.nx || c.values.cols() != g.ny) throw Error("grid mismatch");

    const FreqRange fk(g.nx), fl(g.ny);
    const double scale = std::max(1.0, c.values.cwiseAbs().maxCoeff());
    for (int kk = 0; kk < g.nx; ++kk) {
        const int k = fk.lo + kk;
        if (-k < fk.lo || -k > fk.hi) continue;
        for (int uu = 0; uu < g.ny; ++uu) {
            const int l = fl.hi - uu;
            if (-l < fl.lo || -l > fl.hi) continue;
            const cplx mirror = c.values(-k - fk.lo, fl.hi + l);
            if (std::abs(c.values(kk, uu) - std::conj(mirror)) > 1e-8 * scale) throw Error("non-Hermitian input");
        }
    }

    const Eigen::MatrixXcd chi = c.values.transpose().colwise().reverse();  // rows l, cols k
    const Eigen::MatrixXcd ix = inverse_kernel(g.nx, g.x_min, g.dx());
    const Eigen::MatrixXcd iy = inverse_kernel(g.ny, g.y_min, g.dy());
    const Eigen::MatrixXcd weighted = iy.transpose() * chi * ix / static_cast<double>(g.nx * g.ny);

    const Eigen::VectorXd wx = trapezoid_weights(g.nx, g.dx());
    const Eigen::VectorXd wy = trapezoid_weights(g.ny, g.dy());
    RealField out(g);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) out.values(j, i) = weighted(j, i).real() / (wx[i] * wy[j]);
    }
    return out;
}

ErrorReport compare(const RealField& a, const RealField& b) {
    if (!a.spec.matches(b.spec)) throw Error("grid mismatch");
    const Eigen::MatrixXd diff = a.values - b.values;
    ErrorReport r;
    Eigen::Index jr = 0, ic = 0;
    r.max_abs = diff.cwiseAbs().maxCoeff(&jr, &ic);
    r.x_at_max = a.spec.x(static_cast<int>(ic));
    r.y_at_max = a.spec.y(static_cast<int>(jr));
    r.l2 = std::sqrt(integrate(RealField(a.spec, diff.cwiseProduct(diff))));
    return r;
}

GaussianIdentityResult gaussian_identity_check(cplx a, cplx b, cplx g, const GridSpec& grid) {
    if (g.real() <= 0.0) throw Error("divergent integrand");
    grid.validate();
    const Eigen::VectorXd wx = trapezoid_weights(grid.nx, grid.dx());
    const Eigen::VectorXd wy = trapezoid_weights(grid.ny, grid.dy());
    // a z + b z* = (a + b) x + i (a - b) y
    const cplx cx = a + b;
    const cplx cy = cplx(0.0, 1.0) * (a - b);
    cplx total = 0.0;
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.y(j);
        cplx row = 0.0;
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x(i);
            row += wx[i] * std::exp(cx * x + cy * y - g * (x * x + y * y));
        }
        total += wy[j] * row;
    }
    return {total / std::numbers::pi, std::exp(a * b / g) / g};
}

}  // namespace catdeco
