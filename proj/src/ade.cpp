#include "gfdtd/ade.hpp"

#include "gfdtd/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace gfdtd::ade {

Coefficients make_coefficients(const dispersion::LorentzPole& pole, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("ADE coefficients require dt > 0");
    }
    dispersion::validate(pole);
    const double wdt2 = pole.omega_p * pole.omega_p * dt * dt;
    const double denom = 1.0 + pole.delta_p * dt;
    Coefficients k;
    k.c_now = (2.0 - wdt2) / denom;
    k.c_prev = (1.0 - pole.delta_p * dt) / denom;
    k.c_drive = constants::epsilon0 * pole.delta_eps * wdt2 / denom;
    k.dt = dt;
    return k;
}

AdvanceResult ade_advance(PoleState state, double e_now, const dispersion::LorentzPole& pole, double dt) {
    const auto k = make_coefficients(pole, dt);
    const double p_next = advance_in_place(state, e_now, k);
    return {state, p_next};
}

}  // namespace gfdtd::ade
