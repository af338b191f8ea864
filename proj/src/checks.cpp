#include "gfdtd/checks.hpp"

#include "gfdtd/ade.hpp"
#include "gfdtd/constants.hpp"
#include "gfdtd/oracle.hpp"
#include "gfdtd/tgm.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace gfdtd::checks {

std::vector<double> random_history(std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> e(length);
    for (auto& v : e) {
        v = dist(rng);
    }
    return e;
}

double recurrence_vs_direct_sum(const dispersion::LorentzPole& pole, double dt, std::span<const double> e_history,
                                double propagator_fault, std::size_t checkpoint_every) {
    auto coeffs = tgm::make_coefficients(pole, dt);
    coeffs.prop_plus *= 1.0 + propagator_fault;
    coeffs.prop_minus *= 1.0 + propagator_fault;

    tgm::PoleState state;
    double max_diff = 0.0;
    double max_ref = 0.0;
    for (std::size_t n = 0; n < e_history.size(); ++n) {
        tgm::advance_in_place(state, e_history[n], coeffs);
        const bool last = n + 1 == e_history.size();
        if (!last && (n + 1) % checkpoint_every != 0) {
            continue;
        }
        const double t_eval = (static_cast<double>(n) + 0.5) * dt;
        const double direct = oracle::direct_convolution_sum(e_history.first(n + 1), pole, dt, t_eval);
        const double recurrent = tgm::polarization_half_step(state, coeffs);
        max_diff = std::max(max_diff, std::abs(recurrent - direct));
        max_ref = std::max(max_ref, std::abs(direct));
    }
    return max_ref > 0.0 ? max_diff / max_ref : max_diff;
}

SymmetryReport symmetry_under_drive(const dispersion::LorentzPole& pole, double dt, std::span<const double> e_history) {
    const auto coeffs = tgm::make_coefficients(pole, dt);
    tgm::PoleState state;
    SymmetryReport report;
    for (double e : e_history) {
        tgm::advance_in_place(state, e, coeffs);
        if (std::abs(state.f_plus) > 0.0) {
            report.conjugacy_error = std::max(report.conjugacy_error,
                                              std::abs(state.f_minus - std::conj(state.f_plus)) / std::abs(state.f_plus));
        }
        const tgm::complex pa = coeffs.pol_plus * state.f_plus;
        const tgm::complex pb = coeffs.pol_minus * state.f_minus;
        const double p_scale = tgm::magnitude_l1(pa) + tgm::magnitude_l1(pb);
        if (p_scale > 0.0) {
            report.polarization_residual = std::max(report.polarization_residual, std::abs((pa + pb).imag()) / p_scale);
        }
        const tgm::complex ja = coeffs.curr_plus * state.f_plus;
        const tgm::complex jb = coeffs.curr_minus * state.f_minus;
        const double j_scale = tgm::magnitude_l1(ja) + tgm::magnitude_l1(jb);
        if (j_scale > 0.0) {
            report.current_residual = std::max(report.current_residual, std::abs((ja + jb).imag()) / j_scale);
        }
    }
    return report;
}

double max_growth_under_zero_drive(const dispersion::LorentzPole& pole, double dt, std::span<const double> e_history,
                                   std::size_t zero_steps) {
    const auto coeffs = tgm::make_coefficients(pole, dt);
    tgm::PoleState state;
    for (double e : e_history) {
        tgm::advance_in_place(state, e, coeffs);
    }
    double growth = 0.0;
    for (std::size_t k = 0; k < zero_steps; ++k) {
        const tgm::PoleState before = state;
        tgm::advance_in_place(state, 0.0, coeffs);
        if (std::abs(before.f_plus) > 0.0) {
            growth = std::max(growth, std::abs(state.f_plus) / std::abs(before.f_plus));
        }
        if (std::abs(before.f_minus) > 0.0) {
            growth = std::max(growth, std::abs(state.f_minus) / std::abs(before.f_minus));
        }
    }
    return growth;
}

namespace {

std::size_t steps_for(double duration, double dt) {
    return static_cast<std::size_t>(std::ceil(duration / dt));
}

double static_polarization(const dispersion::LorentzPole& pole, double e0) {
    return constants::epsilon0 * pole.delta_eps * e0;
}

}  // namespace

double tgm_steady_state_error(const dispersion::LorentzPole& pole, double dt, double e0, double duration) {
    const auto coeffs = tgm::make_coefficients(pole, dt);
    tgm::PoleState state;
    for (std::size_t n = 0, steps = steps_for(duration, dt); n < steps; ++n) {
        tgm::advance_in_place(state, e0, coeffs);
    }
    const double target = static_polarization(pole, e0);
    return std::abs(tgm::polarization_half_step(state, coeffs) - target) / std::abs(target);
}

double ade_steady_state_error(const dispersion::LorentzPole& pole, double dt, double e0, double duration) {
    const auto coeffs = ade::make_coefficients(pole, dt);
    ade::PoleState state;
    for (std::size_t n = 0, steps = steps_for(duration, dt); n < steps; ++n) {
        ade::advance_in_place(state, e0, coeffs);
    }
    const double target = static_polarization(pole, e0);
    return std::abs(state.p_now - target) / std::abs(target);
}

double ade_fixed_point_error(const dispersion::LorentzPole& pole, double dt, double e0) {
    const double p = static_polarization(pole, e0);
    const auto result = ade::ade_advance({p, p}, e0, pole, dt);
    return std::abs(result.p_next - p) / std::abs(p);
}

}  // namespace gfdtd::checks
