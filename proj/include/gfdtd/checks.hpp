#pragma once

// Invariant measurements for a single Lorentz pole, shared by `gfdtd verify`
// and the test suites. Each returns the measured quantity; callers own the
// pass/fail threshold.

#include "gfdtd/dispersion.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gfdtd::checks {

/// Uniform values in [-1, 1] from a seeded mt19937_64.
std::vector<double> random_history(std::size_t length, std::uint64_t seed);

/// Runs the recurrence over e_history and compares P(t_n + dt/2) against the direct
/// convolution sum every `checkpoint_every` steps and at the last step. Returns
/// max |diff| / max |P_direct|. `propagator_fault` perturbs both propagators.
double recurrence_vs_direct_sum(const dispersion::LorentzPole& pole, double dt, std::span<const double> e_history,
                                double propagator_fault = 0.0, std::size_t checkpoint_every = 100);

struct SymmetryReport {
    double conjugacy_error = 0.0;        ///< max |F- - conj(F+)| / |F+|
    double polarization_residual = 0.0;  ///< max |Im P sum| / magnitude scale
    double current_residual = 0.0;       ///< max |Im dP/dt sum| / magnitude scale
};

SymmetryReport symmetry_under_drive(const dispersion::LorentzPole& pole, double dt, std::span<const double> e_history);

/// After driving with e_history, runs `zero_steps` undriven steps and returns the largest
/// step-to-step growth ratio max(|F_{k+1}| / |F_k|) over both accumulators.
double max_growth_under_zero_drive(const dispersion::LorentzPole& pole, double dt, std::span<const double> e_history,
                                   std::size_t zero_steps);

/// |P - eps0 d_eps E0| / |eps0 d_eps E0| after `duration` seconds of constant drive E0.
double tgm_steady_state_error(const dispersion::LorentzPole& pole, double dt, double e0, double duration);
double ade_steady_state_error(const dispersion::LorentzPole& pole, double dt, double e0, double duration);

/// Relative change of one ADE update applied to p_now = p_prev = eps0 d_eps E0.
double ade_fixed_point_error(const dispersion::LorentzPole& pole, double dt, double e0);

}  // namespace gfdtd::checks
