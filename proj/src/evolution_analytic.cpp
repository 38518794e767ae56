#include "catdeco/evolution_analytic.hpp"

#include <cmath>
#include <numbers>

namespace catdeco {

DampingTime::DampingTime(double kt_) : kt(kt_) {
    if (!(kt >= 0.0)) throw Error("damping time must be non-negative");
}

DiffusionTime::DiffusionTime(double delta_) : delta(delta_) {
    if (!(delta >= 0.0)) throw Error("diffusion time must be non-negative");
}

double standard_interference_amplitude(const CatState& c, DampingTime t) {
    return std::exp(-2.0 * c.beta * c.beta * (1.0 - std::exp(-2.0 * t.kt)));
}

double diffusive_interference_amplitude(const CatState& c, DiffusionTime t) {
    return std::exp(-4.0 * c.beta * c.beta * t.delta / (1.0 + 2.0 * t.delta));
}

RealField standard_wigner(const CatState& c, DampingTime t, const GridSpec& g, SampleOptions opt) {
    g.validate();
    const double shrink = std::exp(-t.kt);
    const double k = 4.0 * c.beta * shrink;
    if (opt.check_fringes) check_fringe_resolution(g, k);
    const double pref = 2.0 * cat_normalization(c) / std::numbers::pi;
    const double fringe = parity_sign(c.parity) * 2.0 * standard_interference_amplitude(c, t);
    const double b = c.beta * shrink;
    return RealField::sample(g, [=](double x, double y) {
        const double y2 = y * y;
        return pref * (std::exp(-2.0 * ((x - b) * (x - b) + y2)) + std::exp(-2.0 * ((x + b) * (x + b) + y2)) +
                       fringe * std::exp(-2.0 * (x * x + y2)) * std::cos(k * y));
    });
}

RealField diffusive_wigner(const CatState& c, DiffusionTime t, const GridSpec& g, SampleOptions opt) {
    g.validate();
    const double spread = 1.0 + 2.0 * t.delta;
    const double k = 4.0 * c.beta / spread;
    if (opt.check_fringes) check_fringe_resolution(g, k);
    const double pref = 2.0 * cat_normalization(c) / (std::numbers::pi * spread);
    const double fringe = parity_sign(c.parity) * 2.0 * diffusive_interference_amplitude(c, t);
    const double b = c.beta;
    const double a = 2.0 / spread;
    return RealField::sample(g, [=](double x, double y) {
        const double y2 = y * y;
        return pref * (std::exp(-a * ((x - b) * (x - b) + y2)) + std::exp(-a * ((x + b) * (x + b) + y2)) +
                       fringe * std::exp(-a * (x * x + y2)) * std::cos(k * y));
    });
}

Mixture diffusive_mixture(const CatState& c, DiffusionTime t, const GridSpec& g) {
    g.validate();
    const double spread = 1.0 + 2.0 * t.delta;
    const double pref = 2.0 * cat_normalization(c) / (std::numbers::pi * spread);
    const double b = c.beta;
    const double a = 2.0 / spread;
    RealField f = RealField::sample(g, [=](double x, double y) {
        const double y2 = y * y;
        return pref * (std::exp(-a * ((x - b) * (x - b) + y2)) + std::exp(-a * ((x + b) * (x + b) + y2)));
    });
    return {std::move(f), c.beta * c.beta > t.delta + 0.5};
}

double fringe_period_factor(BathModel model, double time) {
    if (!(time >= 0.0)) throw Error("time must be non-negative");
    return model == BathModel::standard ? std::exp(time) : 1.0 + 2.0 * time;
}

}  // namespace catdeco
