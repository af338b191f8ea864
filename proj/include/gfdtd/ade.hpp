#pragma once

// Auxiliary differential equation update for one Lorentz pole:
//
//   (P^{n+1} - 2P^n + P^{n-1})/dt^2 + delta (P^{n+1} - P^{n-1})/dt + w_p^2 P^n
//       = eps0 d_eps w_p^2 E^n
//
// Explicit, second order; stable while w_p dt is small (no hard check).

#include "gfdtd/dispersion.hpp"

namespace gfdtd::ade {

struct PoleState {
    double p_now = 0.0;
    double p_prev = 0.0;
};

struct Coefficients {
    double c_now = 0.0;
    double c_prev = 0.0;
    double c_drive = 0.0;
    double dt = 0.0;
};

Coefficients make_coefficients(const dispersion::LorentzPole& pole, double dt);

/// Shifts the history and returns P^{n+1}.
inline double advance_in_place(PoleState& state, double e_now, const Coefficients& k) noexcept {
    const double p_next = k.c_now * state.p_now - k.c_prev * state.p_prev + k.c_drive * e_now;
    state.p_prev = state.p_now;
    state.p_now = p_next;
    return p_next;
}

struct AdvanceResult {
    PoleState state;
    double p_next;
};

AdvanceResult ade_advance(PoleState state, double e_now, const dispersion::LorentzPole& pole, double dt);

/// (P^{n+1} - P^n)/dt, the central estimate of dP/dt at t_n + dt/2.
inline double current_half_step(const PoleState& after_advance, double dt) noexcept {
    return (after_advance.p_now - after_advance.p_prev) / dt;
}

}  // namespace gfdtd::ade
