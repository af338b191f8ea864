#include "gfdtd/dispersion.hpp"

#include "gfdtd/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gfdtd::dispersion {

void validate(const LorentzPole& pole) {
    if (!std::isfinite(pole.delta_eps) || !std::isfinite(pole.omega_p) || !std::isfinite(pole.delta_p)) {
        throw std::invalid_argument("Lorentz pole fields must be finite");
    }
    if (pole.omega_p <= 0.0) {
        throw std::invalid_argument("Lorentz pole requires omega_p > 0");
    }
    if (pole.delta_p < 0.0) {
        throw std::invalid_argument("Lorentz pole requires delta_p >= 0");
    }
    if (pole.delta_p == pole.omega_p) {
        throw DegeneratePoleError("critically damped Lorentz pole (delta_p == omega_p) has a double root");
    }
}

void validate(const Medium& medium) {
    if (!std::isfinite(medium.eps_inf) || medium.eps_inf <= 0.0) {
        throw std::invalid_argument("medium requires eps_inf > 0");
    }
    if (!std::isfinite(medium.sigma) || medium.sigma < 0.0) {
        throw std::invalid_argument("medium requires sigma >= 0");
    }
    for (const auto& pole : medium.poles) {
        validate(pole);
    }
}

bool is_underdamped(const LorentzPole& pole) noexcept { return pole.delta_p < pole.omega_p; }

std::complex<double> permittivity(const Medium& medium, double omega) {
    std::complex<double> eps{medium.eps_inf, 0.0};
    for (const auto& pole : medium.poles) {
        const double wp2 = pole.omega_p * pole.omega_p;
        const std::complex<double> denom{wp2 - omega * omega, 2.0 * omega * pole.delta_p};
        if (denom == 0.0) {
            throw ResonanceError("lossless Lorentz pole evaluated at its resonance omega = " +
                                 std::to_string(omega));
        }
        eps += pole.delta_eps * wp2 / denom;
    }
    return eps;
}

PoleRoots pole_roots(const LorentzPole& pole) {
    validate(pole);
    // Principal root; a negative real argument with +0 imaginary part maps to +i*sqrt(|x|).
    const std::complex<double> s =
        std::sqrt(std::complex<double>{pole.omega_p * pole.omega_p - pole.delta_p * pole.delta_p, 0.0});
    const std::complex<double> i_delta{0.0, pole.delta_p};
    return {i_delta + s, i_delta - s};
}

std::complex<double> reflection_coefficient(const Medium& medium, double omega) {
    const std::complex<double> n = std::sqrt(permittivity(medium, omega));
    return (n - 1.0) / (n + 1.0);
}

}  // namespace gfdtd::dispersion
