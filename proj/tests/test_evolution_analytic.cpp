#include <cmath>
#include <numbers>

#include <doctest.h>

#include "catdeco/evolution_analytic.hpp"
#include "catdeco/scenario.hpp"

using namespace catdeco;

namespace {

const CatState kCat{3.0, Parity::even};

GridSpec wide_grid() { return GridSpec::square(11.0, 401); }

}  // namespace

TEST_CASE("standard model closed form") {
    const GridSpec g = wide_grid();
    CHECK(compare(standard_wigner(kCat, DampingTime(0.0), g), cat_wigner(kCat, g)).max_abs < 1e-12);

    // delta = 4 -> kt = 2; components at +-3 e^{-2}, merged into one hump.
    const RealField merged = standard_wigner(kCat, DampingTime(2.0), g);
    CHECK(component_center(merged) == doctest::Approx(3.0 * std::exp(-2.0)).epsilon(1e-6));
    CHECK(3.0 * std::exp(-2.0) == doctest::Approx(0.40601).epsilon(1e-5));

    CHECK(compare(standard_wigner(kCat, DampingTime(50.0), g), vacuum_wigner(g)).max_abs < 1e-10);
    CHECK_THROWS_AS(DampingTime(-0.1), Error);
}

TEST_CASE("standard interference amplitude") {
    CHECK(standard_interference_amplitude(kCat, DampingTime(0.0)) == 1.0);
    CHECK(standard_interference_amplitude(kCat, DampingTime(0.05)) == doctest::Approx(0.1804).epsilon(1e-3));
    CHECK(standard_interference_amplitude(kCat, DampingTime(0.05)) ==
          doctest::Approx(std::exp(-18.0 * (1.0 - std::exp(-0.1)))).epsilon(1e-15));
    CHECK(standard_interference_amplitude(kCat, DampingTime(100.0)) == doctest::Approx(1.523e-8).epsilon(1e-3));
}

TEST_CASE("diffusive model closed form") {
    const GridSpec g = wide_grid();
    CHECK(compare(diffusive_wigner(kCat, DiffusionTime(0.0), g), cat_wigner(kCat, g)).max_abs < 1e-12);

    const RealField late = diffusive_wigner(kCat, DiffusionTime(4.0), g);
    CHECK(std::abs(peak_along_real_axis(late) - 3.0) <= g.dx());

    // Origin at delta = 0.5: Gaussians and fringe both carry e^{-9}.
    const RealField mid = diffusive_wigner(kCat, DiffusionTime(0.5), g);
    const double n2 = cat_normalization(kCat);
    CHECK(mid.at(200, 200) == doctest::Approx(n2 / std::numbers::pi * 4.0 * std::exp(-9.0)).epsilon(1e-12));
}

TEST_CASE("diffusive interference amplitude") {
    CHECK(diffusive_interference_amplitude(kCat, DiffusionTime(0.1)) == doctest::Approx(std::exp(-3.0)).epsilon(1e-14));
    CHECK(diffusive_interference_amplitude(kCat, DiffusionTime(0.1)) == doctest::Approx(0.049787).epsilon(1e-5));
    CHECK(diffusive_interference_amplitude(kCat, DiffusionTime(0.5)) == doctest::Approx(1.2341e-4).epsilon(1e-4));
    CHECK(diffusive_interference_amplitude(kCat, DiffusionTime(4.0)) == doctest::Approx(1.1254e-7).epsilon(1e-4));
}

TEST_CASE("two-Gaussian mixture limit") {
    const GridSpec g = wide_grid();
    const Mixture late = diffusive_mixture(kCat, DiffusionTime(4.0), g);
    CHECK(late.valid);
    CHECK(compare(diffusive_wigner(kCat, DiffusionTime(4.0), g), late.field).max_abs < 1e-6);

    const CatState small(1.0, Parity::even);
    CHECK_FALSE(diffusive_mixture(small, DiffusionTime(1.0), g).valid);

    const Mixture early = diffusive_mixture(kCat, DiffusionTime(0.0), g);
    CHECK(early.valid);
    const double gap = diffusive_wigner(kCat, DiffusionTime(0.0), g).at(200, 200) - early.field.at(200, 200);
    CHECK(gap == doctest::Approx(2.0 * (2.0 * cat_normalization(kCat) / std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("fringe period factor") {
    CHECK(fringe_period_factor(BathModel::standard, 0.0) == 1.0);
    CHECK(fringe_period_factor(BathModel::diffusive, 4.0) == 9.0);
    CHECK(fringe_period_factor(BathModel::standard, 2.0) == doctest::Approx(7.389056).epsilon(1e-6));
}

TEST_CASE("analytic invariants") {
    const GridSpec g = wide_grid();
    const double times[] = {0.0, 0.1, 0.25, 0.5, 1.0, 2.0, 4.0};

    SUBCASE("normalization at every time") {
        for (Parity p : {Parity::even, Parity::odd}) {
            const CatState c(3.0, p);
            for (double t : times) {
                CAPTURE(t);
                CHECK(std::abs(integrate(standard_wigner(c, DampingTime(0.5 * t), g)) - 1.0) < 1e-6);
                CHECK(std::abs(integrate(diffusive_wigner(c, DiffusionTime(t), g)) - 1.0) < 1e-6);
            }
        }
    }
    SUBCASE("amplitudes strictly decrease") {
        for (std::size_t k = 1; k < std::size(times); ++k) {
            CHECK(standard_interference_amplitude(kCat, DampingTime(times[k])) <
                  standard_interference_amplitude(kCat, DampingTime(times[k - 1])));
            CHECK(diffusive_interference_amplitude(kCat, DiffusionTime(times[k])) <
                  diffusive_interference_amplitude(kCat, DiffusionTime(times[k - 1])));
        }
    }
    SUBCASE("diffusive peaks stay put") {
        for (double delta = 0.0; delta <= 4.0; delta += 0.25) {
            CAPTURE(delta);
            CHECK(std::abs(peak_along_real_axis(diffusive_wigner(kCat, DiffusionTime(delta), g)) - 3.0) <= g.dx());
        }
    }
    SUBCASE("standard peaks drift while the components are separated") {
        for (double kt : {0.0, 0.05, 0.25, 0.5}) {
            CAPTURE(kt);
            const double center = 3.0 * std::exp(-kt);
            CHECK(std::abs(peak_along_real_axis(standard_wigner(kCat, DampingTime(kt), g)) - center) <= g.dx());
        }
    }
    SUBCASE("long-time limit") {
        CHECK(compare(standard_wigner(kCat, DampingTime(20.0), g), vacuum_wigner(g)).max_abs < 1e-8);
    }
    SUBCASE("purity from the Wigner function") {
        CHECK(std::abs(purity_from_wigner(cat_wigner(kCat, g)) - 1.0) < 1e-4);
        double prev = 2.0;
        for (double t : times) {
            const double p = purity_from_wigner(diffusive_wigner(kCat, DiffusionTime(t), g));
            CHECK(p < prev);
            prev = p;
        }
        // Pure loss only mixes the state until the fringe is gone; afterwards the two
        // components merge into the vacuum and purity climbs back toward 1.
        prev = 2.0;
        for (double t : {0.0, 0.005, 0.01, 0.02, 0.05, 0.1}) {
            const double p = purity_from_wigner(standard_wigner(kCat, DampingTime(0.5 * t), g));
            CHECK(p < prev);
            prev = p;
        }
        CHECK(purity_from_wigner(standard_wigner(kCat, DampingTime(2.0), g)) > prev);
    }
}
