#pragma once

#include "catdeco/phase_space.hpp"
#include "catdeco/states.hpp"

namespace catdeco {

/// s-ordered quasi-distribution: s = 1 P-function, s = 0 Wigner, s = -1 Husimi Q.
struct OrderedDistribution {
    RealField field;
    double s = 0.0;
};

/// Tolerance below zero still accepted as "nonnegative".
inline constexpr double kNonnegativeSlack = 1e-9;

/// Symmetric-order characteristic function <exp(gamma a+ - gamma* a)>:
/// dft(field) * exp(-s |gamma|^2 / 2).
ComplexField char_function(const OrderedDistribution& d, Diagnostics* diag = nullptr);

/**
 * Re-expresses the distribution at ordering s_to <= d.s by multiplying its
 * transform with exp((s_to - s)|gamma|^2 / 2), i.e. a Gaussian blur of per-axis
 * variance (s - s_to) / 4. Throws Error("deconvolution refused") for s_to > d.s.
 */
OrderedDistribution reorder(const OrderedDistribution& d, double s_to);

struct OrderingPair {
    double s_wigner;  // Wigner at time t equals the initial s_wigner-ordered distribution
    double s_p;       // P-function at time t equals the initial s_p-ordered distribution
};

/// Under pure diffusion for time kt: s_wigner = -4 kt, s_p = 1 - 4 kt.
OrderingPair diffusion_as_reordering(double kt);

/// Integral of max(0, -f).
double negativity_volume(const RealField& f);

/// True when min(f) >= -kNonnegativeSlack.
bool is_nonnegative(const RealField& f);

}  // namespace catdeco
