#include "gfdtd/tgm.hpp"

#include "gfdtd/constants.hpp"
#include "gfdtd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gfdtd::tgm {

namespace {

constexpr complex kI{0.0, 1.0};

// e^{i z h} - e^{-i z h} written as 2i sin(z h), which avoids cancellation for small |z h|.
complex impulse_numerator(complex z, double half_dt) { return 2.0 * kI * std::sin(z * half_dt); }

}  // namespace

PoleCoefficients make_coefficients(const dispersion::LorentzPole& pole, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("TGM coefficients require dt > 0");
    }
    const auto roots = dispersion::pole_roots(pole);
    const complex zp = roots.plus;
    const complex zm = roots.minus;
    const double half = 0.5 * dt;

    PoleCoefficients k;
    k.z_plus = zp;
    k.z_minus = zm;
    k.dt = dt;
    k.scale = constants::epsilon0 * pole.delta_eps * pole.omega_p * pole.omega_p;
    k.prop_plus = std::exp(kI * zp * dt);
    k.prop_minus = std::exp(kI * zm * dt);
    k.inject_plus = impulse_numerator(zp, half) / (zp * (zm - zp));
    k.inject_minus = impulse_numerator(zm, half) / (zm * (zp - zm));
    const complex half_plus = std::exp(kI * zp * half);
    const complex half_minus = std::exp(kI * zm * half);
    k.pol_plus = k.scale * half_plus;
    k.pol_minus = k.scale * half_minus;
    k.curr_plus = kI * k.scale * zp * half_plus;
    k.curr_minus = kI * k.scale * zm * half_minus;
    return k;
}

double green_function(const dispersion::LorentzPole& pole, double t, double t_n, double dt) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("green_function requires dt > 0");
    }
    const double elapsed = t - t_n;
    // Rounding slack: t = t_n + dt/2 computed late in a long history carries
    // an error proportional to |t|, not to dt.
    const double slack = 1e-12 * dt + 8.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), std::abs(t_n));
    if (elapsed < 0.5 * dt - slack) {
        std::ostringstream msg;
        msg << "green_function evaluated inside the impulse support: t - t_n = " << elapsed
            << " < dt/2 = " << 0.5 * dt;
        throw DomainError(msg.str());
    }
    const auto roots = dispersion::pole_roots(pole);
    const complex zp = roots.plus;
    const complex zm = roots.minus;
    const double half = 0.5 * dt;
    const complex a = kI * impulse_numerator(zp, half) / (kI * zp * (zm - zp)) * std::exp(kI * zp * elapsed);
    const complex b = kI * impulse_numerator(zm, half) / (kI * zm * (zp - zm)) * std::exp(kI * zm * elapsed);
    return checked_real(a + b, magnitude_l1(a) + magnitude_l1(b));
}

double checked_real(complex value, double magnitude_scale) {
    if (std::abs(value.imag()) > kImagTolerance * magnitude_scale) {
        std::ostringstream msg;
        msg << "imaginary residual " << value.imag() << " exceeds " << kImagTolerance
            << " of magnitude scale " << magnitude_scale;
        throw RealnessError(msg.str());
    }
    return value.real();
}

complex polarization_sum(const PoleState& state, const PoleCoefficients& k, double tau) {
    return k.scale * (std::exp(kI * k.z_plus * tau) * state.f_plus + std::exp(kI * k.z_minus * tau) * state.f_minus);
}

complex polarization_current_sum(const PoleState& state, const PoleCoefficients& k) {
    return k.curr_plus * state.f_plus + k.curr_minus * state.f_minus;
}

double polarization(const PoleState& state, const PoleCoefficients& k, double tau) {
    if (tau < 0.0 || tau > k.dt * (1.0 + 1e-12)) {
        throw DomainError("polarization offset tau must lie in [0, dt]");
    }
    const complex a = k.scale * std::exp(kI * k.z_plus * tau) * state.f_plus;
    const complex b = k.scale * std::exp(kI * k.z_minus * tau) * state.f_minus;
    return checked_real(a + b, magnitude_l1(a) + magnitude_l1(b));
}

double polarization_half_step(const PoleState& state, const PoleCoefficients& k) {
    const complex a = k.pol_plus * state.f_plus;
    const complex b = k.pol_minus * state.f_minus;
    return checked_real(a + b, magnitude_l1(a) + magnitude_l1(b));
}

}  // namespace gfdtd::tgm
