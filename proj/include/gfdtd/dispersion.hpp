#pragma once

#include <complex>
#include <vector>

namespace gfdtd::dispersion {

/// One Lorentz oscillator term of the permittivity.
struct LorentzPole {
    double delta_eps = 0.0;  ///< oscillator strength
    double omega_p = 0.0;    ///< resonance angular frequency, rad/s
    double delta_p = 0.0;    ///< damping rate, rad/s
};

struct Medium {
    double eps_inf = 1.0;
    double sigma = 0.0;  ///< S/m
    std::vector<LorentzPole> poles;

    static Medium vacuum() { return {}; }
    bool dispersive() const noexcept { return !poles.empty(); }
};

/// Pair of simple poles of the Green function's transform, i*delta +/- sqrt(omega^2 - delta^2).
struct PoleRoots {
    std::complex<double> plus;
    std::complex<double> minus;
};

/// Throws std::invalid_argument for non-finite or out-of-range fields and
/// DegeneratePoleError for the critically damped case.
void validate(const LorentzPole& pole);
void validate(const Medium& medium);

bool is_underdamped(const LorentzPole& pole) noexcept;

/// Relative permittivity eps_inf + sum_p d_eps w_p^2 / (w_p^2 + 2 i w delta_p - w^2).
/// Throws ResonanceError when a lossless pole is evaluated at w = +/- w_p.
std::complex<double> permittivity(const Medium& medium, double omega);

PoleRoots pole_roots(const LorentzPole& pole);

/// Normal-incidence amplitude reflection from vacuum onto a non-magnetic
/// half-space, (sqrt(eps) - 1) / (sqrt(eps) + 1) on the principal branch.
std::complex<double> reflection_coefficient(const Medium& medium, double omega);

}  // namespace gfdtd::dispersion
