#pragma once

// Brute-force references for the TGM recurrence: explicit convolution sums and
// fine-step RK4 integration of the polarization ODE. Shipped with the library
// so the `verify` command can regenerate every derived check.

#include "gfdtd/dispersion.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gfdtd::oracle {

/// Uniform fine-mesh samples of y and y'.
struct OdeTrace {
    std::vector<double> times;
    std::vector<double> values;
    std::vector<double> derivatives;
};

/// eps0 d_eps w_p^2 sum_n E^n G(t_eval; n dt, dt), summing only impulses that have
/// ended by t_eval. O(N) per call.
double direct_convolution_sum(std::span<const double> e_history, const dispersion::LorentzPole& pole, double dt,
                              double t_eval);

/// RK4 integration of w_p^2 G + 2 delta G' + G'' = I(t) from rest at t_n - dt/2, with I = 1 on
/// [t_n - dt/2, t_n + dt/2]. The fine step is dt / ceil(dt / fine_step) so the impulse edges
/// fall on mesh points; every record_stride-th point is kept. Requires fine_step <= dt/100.
OdeTrace green_rk4(const dispersion::LorentzPole& pole, double t_n, double dt, double t_end, double fine_step,
                   std::size_t record_stride = 1);

/// Polarization ODE driven by the zero-order-hold staircase of e_samples (E^n on
/// [t_n - dt/2, t_n + dt/2)), integrated from rest at -dt/2 to (len - 1/2) dt.
OdeTrace polarization_rk4(std::span<const double> e_samples, const dispersion::LorentzPole& pole, double dt,
                          double fine_step, std::size_t record_stride = 1);

/// Polarization ODE driven by a continuous E(t), from rest at t_start to t_end.
OdeTrace polarization_rk4(const std::function<double(double)>& drive, const dispersion::LorentzPole& pole,
                          double t_start, double t_end, double fine_step, std::size_t record_stride = 1);

struct ConvergenceLevel {
    double dt = 0.0;
    double max_error = 0.0;  ///< max |P_tgm - P_exact| / max |P_exact| over t_n + dt/2
};

struct ConvergenceStudy {
    std::vector<ConvergenceLevel> levels;
    /// max_error[k] / max_error[k+1] for each halving of dt.
    std::vector<double> reduction_factors;
    double min_observed_order() const;
};

/// Drives TGM with samples of sin(omega_drive t), t >= 0, and compares against RK4 of the
/// continuous drive. dt halves at each of `levels` levels starting from dt_coarsest.
ConvergenceStudy sinusoid_convergence(const dispersion::LorentzPole& pole, double omega_drive, double duration,
                                      double dt_coarsest, std::size_t levels);

}  // namespace gfdtd::oracle
