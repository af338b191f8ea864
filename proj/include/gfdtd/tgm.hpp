#pragma once

// Transient Green method for one Lorentz pole.
//
// The sampled field E^n is treated as a staircase, constant on
// [t_n - dt/2, t_n + dt/2]. Convolving that staircase with the closed-form
// Green function of the polarization ODE collapses into two complex
// accumulators per pole,
//
//     F±_N = F±_{N-1} e^{i z± dt} + inject± E^N,
//
// from which P(t_N + tau) and dP/dt(t_N + tau) follow by multiplication.
// Both are exact for the staircase drive whenever tau >= dt/2.

#include "gfdtd/dispersion.hpp"

#include <cmath>
#include <complex>

namespace gfdtd::tgm {

using complex = std::complex<double>;

/// Relative bound on the imaginary residual before a real part is taken.
inline constexpr double kImagTolerance = 1e-10;

struct PoleCoefficients {
    complex z_plus, z_minus;
    complex prop_plus, prop_minus;      ///< e^{i z dt}
    complex inject_plus, inject_minus;  ///< (e^{i z dt/2} - e^{-i z dt/2}) / (z (z_other - z)), s^2
    complex curr_plus, curr_minus;      ///< i scale z e^{i z dt/2}
    complex pol_plus, pol_minus;        ///< scale e^{i z dt/2}
    double scale = 0.0;                 ///< eps0 * delta_eps * omega_p^2
    double dt = 0.0;
};

struct PoleState {
    complex f_plus{};
    complex f_minus{};
};

PoleCoefficients make_coefficients(const dispersion::LorentzPole& pole, double dt);

/// Response at t to a unit rectangular impulse centred on t_n with width dt.
/// Valid only after the impulse has ended; throws DomainError for t < t_n + dt/2.
double green_function(const dispersion::LorentzPole& pole, double t, double t_n, double dt);

/// a * b without the C99 Annex G inf/nan recovery path; operands here are always finite.
inline complex multiply(complex a, complex b) noexcept {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline void advance_in_place(PoleState& state, double e_now, const PoleCoefficients& k) noexcept {
    state.f_plus = multiply(state.f_plus, k.prop_plus) + k.inject_plus * e_now;
    state.f_minus = multiply(state.f_minus, k.prop_minus) + k.inject_minus * e_now;
}

inline PoleState advance_state(PoleState state, double e_now, const PoleCoefficients& coeffs) noexcept {
    advance_in_place(state, e_now, coeffs);
    return state;
}

/// |Re| + |Im|: the magnitude scale used for realness checks (within sqrt(2) of |z|).
inline double magnitude_l1(complex z) noexcept { return std::abs(z.real()) + std::abs(z.imag()); }

/// Real part of a two-term sum, after checking |Im| against kImagTolerance * magnitude_scale.
double checked_real(complex value, double magnitude_scale);

/// Unprojected sums; exposed so callers can inspect the imaginary residual.
complex polarization_sum(const PoleState& state, const PoleCoefficients& coeffs, double tau);
complex polarization_current_sum(const PoleState& state, const PoleCoefficients& coeffs);

/// P at t_N + tau, 0 <= tau <= dt, from the state after E^N was injected.
double polarization(const PoleState& state, const PoleCoefficients& coeffs, double tau);

/// P at t_N + dt/2 using the precomputed half-step prefactors.
double polarization_half_step(const PoleState& state, const PoleCoefficients& coeffs);

/// dP/dt at t_N + dt/2. The state must already hold E^N.
inline double polarization_current_half_step(const PoleState& state, const PoleCoefficients& k) {
    const complex a = multiply(k.curr_plus, state.f_plus);
    const complex b = multiply(k.curr_minus, state.f_minus);
    const complex sum = a + b;
    const double scale = magnitude_l1(a) + magnitude_l1(b);
    if (std::abs(sum.imag()) <= kImagTolerance * scale) {
        return sum.real();
    }
    return checked_real(sum, scale);
}

}  // namespace gfdtd::tgm
