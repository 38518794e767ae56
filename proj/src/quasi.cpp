#include "catdeco/quasi.hpp"

#include <cmath>

namespace catdeco {

namespace {

void scale_by_gaussian(ComplexField& c, double exponent) {
    for (int jv = 0; jv < c.spec.ny; ++jv) {
        const double v = c.v(jv);
        for (int iu = 0; iu < c.spec.nx; ++iu) {
            const double u = c.u(iu);
            c.values(jv, iu) *= std::exp(exponent * (u * u + v * v));
        }
    }
}

}  // namespace

ComplexField char_function(const OrderedDistribution& d, Diagnostics* diag) {
    ComplexField c = dft(d.field, diag);
    scale_by_gaussian(c, -0.5 * d.s);
    return c;
}

OrderedDistribution reorder(const OrderedDistribution& d, double s_to) {
    if (s_to > d.s) throw Error("deconvolution refused");
    if (s_to == d.s) return d;
    ComplexField c = dft(d.field);
    scale_by_gaussian(c, 0.5 * (s_to - d.s));
    return {idft(c), s_to};
}

OrderingPair diffusion_as_reordering(double kt) {
    if (!(kt >= 0.0)) throw Error("diffusion time must be non-negative");
    return {-4.0 * kt, 1.0 - 4.0 * kt};
}

double negativity_volume(const RealField& f) {
    return integrate(RealField(f.spec, (-f.values).cwiseMax(0.0)));
}

bool is_nonnegative(const RealField& f) { return f.values.minCoeff() >= -kNonnegativeSlack; }

}  // namespace catdeco
