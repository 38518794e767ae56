#pragma once

#include "catdeco/states.hpp"

namespace catdeco {

/// kappa * t for the pure-loss model.
struct DampingTime {
    double kt = 0.0;
    explicit DampingTime(double kt_);
};

/// delta = 2 kappa t for the gain-compensated (drift-free) model.
struct DiffusionTime {
    double delta = 0.0;
    explicit DiffusionTime(double delta_);
};

enum class BathModel { standard, diffusive };

/**
 * Wigner function of the cat after pure loss for time kt. The components sit at
 * +-beta e^{-kt} with coherent width, the fringe wavenumber is 4 beta e^{-kt}
 * and the fringe amplitude carries standard_interference_amplitude().
 */
RealField standard_wigner(const CatState& c, DampingTime t, const GridSpec& g, SampleOptions opt = {});

/// exp(-2 beta^2 (1 - e^{-2 kt})).
double standard_interference_amplitude(const CatState& c, DampingTime t);

/**
 * Wigner function of the cat under pure diffusion for time delta. Components
 * stay at +-beta with variance scaled by (1 + 2 delta); fringe wavenumber
 * 4 beta / (1 + 2 delta), fringe amplitude diffusive_interference_amplitude().
 */
RealField diffusive_wigner(const CatState& c, DiffusionTime t, const GridSpec& g, SampleOptions opt = {});

/// exp(-4 beta^2 delta / (1 + 2 delta)).
double diffusive_interference_amplitude(const CatState& c, DiffusionTime t);

struct Mixture {
    RealField field;
    bool valid;  // beta^2 > delta + 1/2
};

/// Two-Gaussian mixture left when the diffusive fringe term is dropped.
Mixture diffusive_mixture(const CatState& c, DiffusionTime t, const GridSpec& g);

/// Factor by which the fringe period pi/(2 beta) has stretched: e^{kt} for the
/// standard model, 1 + 2 delta for the diffusive one. `time` is kt or delta.
double fringe_period_factor(BathModel model, double time);

}  // namespace catdeco
