#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "catdeco/phase_space.hpp"
#include "catdeco/states.hpp"

using namespace catdeco;

namespace {

// Grid with 512 samples whose conjugate spacing is exactly pi/24 on both axes.
GridSpec pi_over_24_grid() { return GridSpec::square(0.5 * 511 * 0.046875, 512); }

}  // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_WITH_AS(GridSpec::square(1.0, 1), "grid too small", Error);
    GridSpec bad{1.0, -1.0, -1.0, 1.0, 4, 4};
    CHECK_THROWS_AS(bad.validate(), Error);
    const GridSpec g{0.0, 1.0, -2.0, 2.0, 11, 5};
    CHECK(g.dx() == doctest::Approx(0.1));
    CHECK(g.y(4) == doctest::Approx(2.0));
}

TEST_CASE("integrate") {
    SUBCASE("constant field is exact") {
        const GridSpec g{0.0, 1.0, 0.0, 1.0, 11, 11};
        CHECK(integrate(RealField::sample(g, [](double, double) { return 1.0; })) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("even cat, beta 3") {
        const double v = integrate(cat_wigner({3.0, Parity::even}, GridSpec::square(8.0, 512)));
        CHECK(std::abs(v - 1.0) < 1e-6);
    }
    SUBCASE("vacuum") {
        CHECK(std::abs(integrate(vacuum_wigner(GridSpec::square(6.0, 256))) - 1.0) < 1e-8);
    }
    SUBCASE("second order on a truncated Gaussian") {
        // Gaussian cut by the domain edge: the trapezoid rule is then only O(h^2).
        const double exact_1d = std::sqrt(std::numbers::pi / 8.0) * std::erf(std::sqrt(2.0));
        const double exact = (2.0 / std::numbers::pi) * exact_1d * exact_1d;
        auto err = [&](int n) {
            const GridSpec g{0.0, 1.0, 0.0, 1.0, n, n};
            return std::abs(integrate(vacuum_wigner(g)) - exact);
        };
        const double ratio = err(33) / err(65);
        CHECK(ratio == doctest::Approx(4.0).epsilon(0.02));
    }
}

TEST_CASE("moments") {
    const RealField vac = vacuum_wigner(GridSpec::square(6.0, 256));
    CHECK(std::abs(moment(vac, 2, 0) - 0.25) < 1e-10);
    CHECK(std::abs(moment(vac, 1, 0)) < 1e-14);
    const RealField cat = cat_wigner({3.0, Parity::even}, GridSpec::square(8.0, 512));
    CHECK(std::abs(moment(cat, 0, 0) - 1.0) < 1e-6);
    CHECK(std::abs(moment(cat, 1, 0)) < 1e-10);
    CHECK_THROWS_AS(moment(cat, -1, 0), Error);
}

TEST_CASE("mean photon number from the Wigner function") {
    CHECK(std::abs(mean_photon_from_wigner(vacuum_wigner(GridSpec::square(6.0, 256)))) < 1e-8);
    // Fock-basis oracle (tests/oracles/oracles.py): sum n |c_n|^2 = 9 tanh 9.
    const double cat = mean_photon_from_wigner(cat_wigner({3.0, Parity::even}, GridSpec::square(9.0, 512)));
    CHECK(std::abs(cat - 8.99999972586037) < 1e-4);
    const double coh = mean_photon_from_wigner(coherent_wigner(2.0, GridSpec::square(8.0, 256)));
    CHECK(std::abs(coh - 4.0) < 1e-6);
}

TEST_CASE("dft of the vacuum") {
    // n h = 4 pi gives a conjugate spacing of exactly 1/4.
    const int n = 256;
    const double h = 4.0 * std::numbers::pi / n;
    const GridSpec g = GridSpec::square(0.5 * (n - 1) * h, n);
    const RealField vac = vacuum_wigner(g);
    const ComplexField chi = dft(vac);
    const int u0 = chi.zero_u_index(), v0 = chi.zero_v_index();
    CHECK(chi.u(u0) == doctest::Approx(0.0));
    CHECK(chi.v(v0) == doctest::Approx(0.0));
    CHECK(chi.at(u0, v0).real() == integrate(vac));
    CHECK(chi.u(u0 + 4) == doctest::Approx(1.0));
    CHECK(std::abs(chi.at(u0 + 4, v0) - std::exp(-0.5)) < 1e-10);
    CHECK(std::abs(chi.at(u0, v0 + 4) - std::exp(-0.5)) < 1e-10);
    CHECK(std::abs(chi.at(u0 + 3, v0 - 2) - std::exp(-0.5 * (9 + 4) / 16.0)) < 1e-10);
}

TEST_CASE("dft of the even cat against the Fock-basis oracle") {
    // Reference values: <psi| exp(gamma a+ - gamma* a) |psi> by matrix exponential (tests/oracles).
    const ComplexField chi = dft(cat_wigner({3.0, Parity::even}, pi_over_24_grid()));
    const int u0 = chi.zero_u_index(), v0 = chi.zero_v_index();
    CHECK(chi.u(u0 + 46) == doctest::Approx(46 * std::numbers::pi / 24));
    CHECK(std::abs(chi.at(u0, v0 + 2) - 1.47168980734608e-08) < 1e-9);         // gamma = i pi / 12
    CHECK(std::abs(chi.at(u0 + 46, v0) - 0.499885679465175) < 1e-7);           // gamma = 46 pi / 24
    CHECK(std::abs(chi.at(u0 + 10, v0 + 3) - (-0.277913844656751)) < 1e-7);    // gamma = (10 + 3i) pi / 24
}

TEST_CASE("dft / idft round trip") {
    SUBCASE("vacuum") {
        const RealField f = vacuum_wigner(GridSpec::square(6.0, 128));
        CHECK(compare(idft(dft(f)), f).max_abs < 1e-8);
    }
    SUBCASE("even cat, odd sample count") {
        const GridSpec g{-9.0, 9.0, -6.0, 6.0, 301, 251};
        const RealField f = cat_wigner({3.0, Parity::even}, g);
        CHECK(compare(idft(dft(f)), f).max_abs < 1e-7);
    }
    SUBCASE("zero field") {
        const RealField z(GridSpec::square(3.0, 64));
        CHECK(idft(dft(z)).values.cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("Hermitian symmetry of the transform") {
        const ComplexField c = dft(cat_wigner({2.0, Parity::odd}, GridSpec::square(7.0, 161)));
        const int u0 = c.zero_u_index(), v0 = c.zero_v_index();
        for (int d = 1; d < 40; d += 7) {
            CHECK(std::abs(c.at(u0 + d, v0 - d / 2) - std::conj(c.at(u0 - d, v0 + d / 2))) < 1e-12);
        }
    }
}

TEST_CASE("idft rejects non-Hermitian data") {
    ComplexField c = dft(vacuum_wigner(GridSpec::square(5.0, 64)));
    c.values(c.zero_v_index() + 1, c.zero_u_index() + 1) += cplx(0.0, 1e-3);
    CHECK_THROWS_WITH_AS(idft(c), "non-Hermitian input", Error);
}

TEST_CASE("boundary leakage warning") {
    Diagnostics diag;
    dft(vacuum_wigner(GridSpec::square(6.0, 64)), &diag);
    CHECK(diag.empty());
    dft(vacuum_wigner(GridSpec::square(1.5, 64)), &diag);
    REQUIRE(diag.warnings.size() == 1);
    CHECK(diag.warnings[0] == "boundary leakage");
}

TEST_CASE("compare") {
    const GridSpec g = GridSpec::square(4.0, 65);
    const RealField a = vacuum_wigner(g);
    CHECK(compare(a, a).max_abs == 0.0);
    const RealField b = coherent_wigner(cplx(0.5, 0.0), g);
    const ErrorReport r = compare(a, b);
    CHECK(r.max_abs > 0.1);
    CHECK(r.l2 > 0.0);
    CHECK(std::abs(r.y_at_max) < 0.2);
    CHECK_THROWS_WITH_AS(compare(a, vacuum_wigner(GridSpec::square(4.0, 64))), "grid mismatch", Error);
}

TEST_CASE("gaussian identity self-test") {
    auto r = gaussian_identity_check(0.0, 0.0, 1.0);
    CHECK(std::abs(r.analytic - 1.0) < 1e-15);
    CHECK(std::abs(r.numeric - r.analytic) < 1e-10);
    r = gaussian_identity_check(1.0, 1.0, 2.0);
    CHECK(std::abs(r.analytic - 0.5 * std::exp(0.5)) < 1e-15);
    CHECK(std::abs(r.numeric - r.analytic) < 1e-10);
    r = gaussian_identity_check(cplx(0, 1), cplx(0, -1), 1.0);
    CHECK(std::abs(r.analytic - std::exp(1.0)) < 1e-14);
    CHECK(std::abs(r.numeric - r.analytic) < 1e-10);
    CHECK_THROWS_WITH_AS(gaussian_identity_check(0.0, 0.0, cplx(0.0, 1.0)), "divergent integrand", Error);

    SUBCASE("random parameters in the supported range") {
        std::mt19937 rng(20240611);
        std::uniform_real_distribution<double> radius(0.0, 2.0), angle(0.0, 2 * std::numbers::pi);
        std::uniform_real_distribution<double> re_g(1.0, 3.0), im_g(-1.0, 1.0);
        for (int trial = 0; trial < 25; ++trial) {
            const cplx a = std::polar(radius(rng), angle(rng));
            const cplx b = std::polar(radius(rng), angle(rng));
            const cplx g(re_g(rng), im_g(rng));
            const auto res = gaussian_identity_check(a, b, g);
            CHECK(std::abs(res.numeric - res.analytic) < 1e-6);
        }
    }
}
