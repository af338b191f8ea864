#include "doctest.h"
#include "test_support.hpp"

#include "gfdtd/checks.hpp"
#include "gfdtd/constants.hpp"
#include "gfdtd/errors.hpp"
#include "gfdtd/oracle.hpp"
#include "gfdtd/tgm.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace gfdtd;

TEST_CASE("propagators decay at the damping rate") {
    const auto pole = test::table1_pole();
    const double dt = test::table1_dt();
    const auto k = tgm::make_coefficients(pole, dt);
    const double expected = std::exp(-pole.delta_p * dt);
    CHECK(std::abs(k.prop_plus) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(std::abs(k.prop_minus) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(std::abs(k.prop_plus) < 1.0);

    // lossless pole sits exactly on the unit circle
    auto lossless = pole;
    lossless.delta_p = 0.0;
    const auto kl = tgm::make_coefficients(lossless, dt);
    CHECK(std::abs(kl.prop_plus) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("underdamped coefficients come in conjugate pairs") {
    const auto k = tgm::make_coefficients(test::table1_pole(), test::table1_dt());
    const auto close = [](tgm::complex a, tgm::complex b) { return std::abs(a - b) <= 1e-13 * std::abs(a); };
    CHECK(close(k.prop_minus, std::conj(k.prop_plus)));
    CHECK(close(k.inject_minus, std::conj(k.inject_plus)));
    CHECK(close(k.curr_minus, std::conj(k.curr_plus)));
    CHECK(close(k.pol_minus, std::conj(k.pol_plus)));
    CHECK(k.scale == doctest::Approx(constants::epsilon0 * 3.0 * test::table1_pole().omega_p * test::table1_pole().omega_p));
}

TEST_CASE("green function matches fine RK4 integration") {
    auto pole = test::table1_pole();
    const double dt = test::table1_dt();
    for (double ratio : {0.1, 3.0}) {
        pole.delta_p = ratio * pole.omega_p;
        const double t_end = 4.0 * 2.0 * constants::pi / pole.omega_p;
        const auto trace = oracle::green_rk4(pole, 0.0, dt, t_end, dt / 1000.0, 100);
        double max_g = 0.0, max_diff = 0.0;
        for (std::size_t i = 0; i < trace.times.size(); ++i) {
            const double t = trace.times[i];
            if (t < 0.5 * dt * (1.0 - 1e-12)) continue;
            const double g = tgm::green_function(pole, t, 0.0, dt);
            max_g = std::max(max_g, std::abs(g));
            max_diff = std::max(max_diff, std::abs(g - trace.values[i]));
        }
        CHECK(max_g > 0.0);
        CHECK(max_diff / max_g < 1e-6);
    }
}

TEST_CASE("green function is undefined before the impulse ends") {
    const auto pole = test::table1_pole();
    const double dt = test::table1_dt();
    CHECK_THROWS_AS(tgm::green_function(pole, 0.0, 0.0, dt), DomainError);
    CHECK_THROWS_AS(tgm::green_function(pole, 0.4 * dt, 0.0, dt), DomainError);
    CHECK_NOTHROW(tgm::green_function(pole, 0.5 * dt, 0.0, dt));
}

TEST_CASE("green function sums to the static response") {
    const auto pole = test::table1_pole();
    const double dt = test::table1_dt();
    const auto steps = static_cast<std::size_t>(std::ceil(10.0 / pole.delta_p / dt));
    const double t_eval = (static_cast<double>(steps) - 0.5) * dt;
    double sum = 0.0;
    for (std::size_t k = 0; k < steps; ++k) {
        sum += tgm::green_function(pole, t_eval, static_cast<double>(k) * dt, dt);
    }
    const double expected = 1.0 / (pole.omega_p * pole.omega_p);
    CHECK(std::abs(sum - expected) / expected < 1e-3);
}

TEST_CASE("recurrence reproduces the direct convolution sum") {
    const auto pole = test::table1_pole();
    const double dt = test::table1_dt();
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto e = checks::random_history(2000, seed);
        CHECK(checks::recurrence_vs_direct_sum(pole, dt, e) < 1e-10);
    }
    auto over = pole;
    over.delta_p = 2.5 * pole.omega_p;
    CHECK(checks::recurrence_vs_direct_sum(over, dt, checks::random_history(2000, 9)) < 1e-10);
}

TEST_CASE("a perturbed propagator is detected") {
    const auto e = checks::random_history(2000, 4);
    CHECK(checks::recurrence_vs_direct_sum(test::table1_pole(), test::table1_dt(), e, 1e-6) > 1e-10);
}

TEST_CASE("state update is linear in the drive") {
    const auto k = tgm::make_coefficients(test::table1_pole(), test::table1_dt());
    const auto a = checks::random_history(300, 11);
    const auto b = checks::random_history(300, 12);
    tgm::PoleState sa, sb, sc;
    for (std::size_t n = 0; n < a.size(); ++n) {
        tgm::advance_in_place(sa, a[n], k);
        tgm::advance_in_place(sb, b[n], k);
        tgm::advance_in_place(sc, 2.0 * a[n] - 0.5 * b[n], k);
    }
    const double pa = tgm::polarization_half_step(sa, k);
    const double pb = tgm::polarization_half_step(sb, k);
    const double pc = tgm::polarization_half_step(sc, k);
    CHECK(pc == doctest::Approx(2.0 * pa - 0.5 * pb).epsilon(1e-12));
    const double ja = tgm::polarization_current_half_step(sa, k);
    const double jb = tgm::polarization_current_half_step(sb, k);
    const double jc = tgm::polarization_current_half_step(sc, k);
    CHECK(jc == doctest::Approx(2.0 * ja - 0.5 * jb).epsilon(1e-12));
}

TEST_CASE("zero state gives zero polarization and current") {
    const auto k = tgm::make_coefficients(test::table1_pole(), test::table1_dt());
    const tgm::PoleState s;
    CHECK(tgm::polarization_half_step(s, k) == 0.0);
    CHECK(tgm::polarization(s, k, 0.0) == 0.0);
    CHECK(tgm::polarization_current_half_step(s, k) == 0.0);
    const auto next = tgm::advance_state(s, 0.0, k);
    CHECK(next.f_plus == tgm::complex{});
    CHECK(next.f_minus == tgm::complex{});
}

TEST_CASE("polarization rejects offsets outside the step") {
    const auto k = tgm::make_coefficients(test::table1_pole(), test::table1_dt());
    const tgm::PoleState s = tgm::advance_state({}, 1.0, k);
    CHECK_THROWS(tgm::polarization(s, k, -0.1 * k.dt));
    CHECK_THROWS(tgm::polarization(s, k, 1.1 * k.dt));
    CHECK(tgm::polarization(s, k, 0.5 * k.dt) == doctest::Approx(tgm::polarization_half_step(s, k)).epsilon(1e-13));
}

TEST_CASE("current is the time derivative of the polarization") {
    const auto k = tgm::make_coefficients(test::table1_pole(), test::table1_dt());
    tgm::PoleState s;
    for (double e : checks::random_history(50, 5)) tgm::advance_in_place(s, e, k);
    const double j = tgm::polarization_current_half_step(s, k);

    // central differences about dt/2; error falls as h^2
    std::vector<double> errors;
    for (double h : {0.2 * k.dt, 0.1 * k.dt}) {
        const double fd = (tgm::polarization(s, k, 0.5 * k.dt + h) - tgm::polarization(s, k, 0.5 * k.dt - h)) / (2.0 * h);
        errors.push_back(std::abs(fd - j));
    }
    CHECK(errors[0] < 1e-3 * std::abs(j));
    CHECK(errors[0] / errors[1] == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("constant drive settles to the static polarization") {
    const auto pole = test::table1_pole();
    CHECK(checks::tgm_steady_state_error(pole, test::table1_dt(), 1.0, 10.0 / pole.delta_p) < 1e-3);
    CHECK(checks::tgm_steady_state_error(pole, test::table1_dt(), -250.0, 10.0 / pole.delta_p) < 1e-3);
}

TEST_CASE("undriven accumulators never grow") {
    const auto pole = test::table1_pole();
    const auto e = checks::random_history(500, 6);
    CHECK(checks::max_growth_under_zero_drive(pole, test::table1_dt(), e, 1000) < 1.0);
    auto over = pole;
    over.delta_p = 3.0 * pole.omega_p;
    CHECK(checks::max_growth_under_zero_drive(over, test::table1_dt(), e, 1000) < 1.0);
}

TEST_CASE("conjugacy and realness hold under random drive") {
    const auto r = checks::symmetry_under_drive(test::table1_pole(), test::table1_dt(), checks::random_history(2000, 7));
    CHECK(r.conjugacy_error < 1e-12);
    CHECK(r.polarization_residual < 1e-10);
    CHECK(r.current_residual < 1e-10);
}

TEST_CASE("large imaginary residual is reported, not truncated") {
    CHECK_THROWS_AS(tgm::checked_real({1.0, 1e-3}, 1.0), RealnessError);
    CHECK(tgm::checked_real({1.0, 1e-12}, 1.0) == 1.0);
}
