#include "doctest.h"
#include "test_support.hpp"

#include "gfdtd/dispersion.hpp"
#include "gfdtd/errors.hpp"

#include <cmath>
#include <complex>
#include <limits>

using namespace gfdtd;
using namespace gfdtd::dispersion;

TEST_CASE("vacuum permittivity is one at every frequency") {
    const Medium vac = Medium::vacuum();
    for (double w : {0.0, 1.0e9, 1.0e12, 1.0e15}) {
        const auto eps = permittivity(vac, w);
        CHECK(eps.real() == 1.0);
        CHECK(eps.imag() == 0.0);
        CHECK(std::abs(reflection_coefficient(vac, w)) == 0.0);
    }
}

TEST_CASE("lorentz permittivity at DC and on resonance") {
    const Medium m = test::table1_medium();
    const double wp = m.poles[0].omega_p;

    const auto eps0 = permittivity(m, 0.0);
    CHECK(eps0.real() == doctest::Approx(4.5).epsilon(1e-14));
    CHECK(eps0.imag() == doctest::Approx(0.0));

    // eps_inf + d_eps w_p / (2 i delta) with delta = w_p / 10
    const auto eps_res = permittivity(m, wp);
    CHECK(eps_res.real() == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(eps_res.imag() == doctest::Approx(-15.0).epsilon(1e-12));

    // far above resonance only eps_inf survives
    const auto eps_hi = permittivity(m, 1.0e4 * wp);
    CHECK(eps_hi.real() == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(std::abs(eps_hi.imag()) < 1e-6);
}

TEST_CASE("permittivity is conjugate-symmetric in frequency") {
    const Medium m = test::table1_medium();
    for (double w : {3.0e9, 1.2e11, 7.7e11}) {
        const auto a = permittivity(m, w);
        const auto b = permittivity(m, -w);
        CHECK(a.real() == doctest::Approx(b.real()).epsilon(1e-14));
        CHECK(a.imag() == doctest::Approx(-b.imag()).epsilon(1e-14));
    }
}

TEST_CASE("pole roots satisfy the characteristic polynomial") {
    const LorentzPole under = test::table1_pole();
    LorentzPole over = under;
    over.delta_p = 2.0 * under.omega_p;
    LorentzPole lossless = under;
    lossless.delta_p = 0.0;

    for (const auto& pole : {under, over, lossless}) {
        const auto r = pole_roots(pole);
        for (const auto z : {r.plus, r.minus}) {
            // e^{i z t} solves the homogeneous oscillator: w_p^2 + 2 i delta z - z^2 = 0
            const auto residual = pole.omega_p * pole.omega_p + 2.0 * std::complex<double>(0, 1) * pole.delta_p * z - z * z;
            CHECK(std::abs(residual) < 1e-12 * pole.omega_p * pole.omega_p);
        }
        CHECK(r.plus.imag() >= 0.0);
        CHECK(r.minus.imag() >= 0.0);
    }

    const auto ru = pole_roots(under);
    CHECK(ru.plus.imag() == doctest::Approx(under.delta_p));
    CHECK(ru.plus.real() == doctest::Approx(std::sqrt(under.omega_p * under.omega_p - under.delta_p * under.delta_p)));
    CHECK(ru.minus.real() == doctest::Approx(-ru.plus.real()));

    const auto ro = pole_roots(over);
    CHECK(ro.plus.real() == 0.0);
    CHECK(ro.minus.real() == 0.0);
    CHECK(ro.plus.imag() != doctest::Approx(ro.minus.imag()));
}

TEST_CASE("critically damped pole is rejected") {
    LorentzPole p = test::table1_pole();
    p.delta_p = p.omega_p;
    CHECK_THROWS_AS(pole_roots(p), DegeneratePoleError);
    CHECK_THROWS_AS(validate(p), DegeneratePoleError);
    CHECK_FALSE(is_underdamped(p));
}

TEST_CASE("invalid pole fields are rejected") {
    LorentzPole p = test::table1_pole();
    p.delta_p = -1.0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = test::table1_pole();
    p.omega_p = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    Medium m = test::table1_medium();
    m.eps_inf = 0.0;
    CHECK_THROWS(validate(m));
}

TEST_CASE("lossless pole evaluated on resonance") {
    Medium m = test::table1_medium();
    m.poles[0].delta_p = 0.0;
    CHECK_THROWS_AS(permittivity(m, m.poles[0].omega_p), ResonanceError);
    CHECK_NOTHROW(permittivity(m, 1.01 * m.poles[0].omega_p));
}

TEST_CASE("reflection magnitude of the reference medium") {
    const Medium m = test::table1_medium();
    const double wp = m.poles[0].omega_p;
    const double r0 = (std::sqrt(4.5) - 1.0) / (std::sqrt(4.5) + 1.0);
    CHECK(std::abs(reflection_coefficient(m, 0.0)) == doctest::Approx(r0).epsilon(1e-12));
    CHECK(r0 == doctest::Approx(0.3592).epsilon(1e-3));
    CHECK(std::abs(reflection_coefficient(m, wp)) == doctest::Approx(0.688).epsilon(5e-3));

    for (int k = 0; k <= 400; ++k) {
        const double w = 2.0 * constants::pi * 1.0e9 * k;
        const double r = std::abs(reflection_coefficient(m, w));
        CHECK(r >= 0.0);
        CHECK(r <= 1.0);
    }
}
