#include "gfdtd/oracle.hpp"

#include "gfdtd/constants.hpp"
#include "gfdtd/tgm.hpp"

#include <boost/numeric/odeint/stepper/runge_kutta4.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gfdtd::oracle {

namespace {

using State = std::array<double, 2>;
using Stepper = boost::numeric::odeint::runge_kutta4<State>;

/// Damped oscillator y'' + 2 delta y' + w^2 y = forcing(t).
class Oscillator {
public:
    Oscillator(const dispersion::LorentzPole& pole, std::size_t stride)
        : wp2_(pole.omega_p * pole.omega_p), two_delta_(2.0 * pole.delta_p), stride_(std::max<std::size_t>(stride, 1)) {}

    /// Integrates `steps` steps of size h from t0 (t = t0 + k h) with the given forcing.
    template <class Forcing>
    void integrate(Forcing&& forcing, double t0, double h, std::size_t steps) {
        auto rhs = [&](const State& x, State& dxdt, double t) {
            dxdt[0] = x[1];
            dxdt[1] = forcing(t) - wp2_ * x[0] - two_delta_ * x[1];
        };
        for (std::size_t k = 0; k < steps; ++k) {
            stepper_.do_step(rhs, state_, t0 + static_cast<double>(k) * h, h);
            if (++counter_ % stride_ == 0) {
                record(t0 + static_cast<double>(k + 1) * h);
            }
        }
    }

    void record(double t) {
        trace_.times.push_back(t);
        trace_.values.push_back(state_[0]);
        trace_.derivatives.push_back(state_[1]);
    }

    OdeTrace take() { return std::move(trace_); }

private:
    double wp2_;
    double two_delta_;
    std::size_t stride_;
    std::size_t counter_ = 0;
    State state_{0.0, 0.0};
    Stepper stepper_;
    OdeTrace trace_;
};

void require_fine(double fine_step, double dt) {
    if (!(fine_step > 0.0) || fine_step > dt / 100.0 * (1.0 + 1e-12)) {
        throw std::invalid_argument("oracle integration requires 0 < fine_step <= dt/100");
    }
}

std::size_t substeps(double span, double fine_step) {
    return static_cast<std::size_t>(std::ceil(span / fine_step * (1.0 - 1e-12)));
}

}  // namespace

double direct_convolution_sum(std::span<const double> e_history, const dispersion::LorentzPole& pole, double dt,
                              double t_eval) {
    const double scale = constants::epsilon0 * pole.delta_eps * pole.omega_p * pole.omega_p;
    double sum = 0.0;
    for (std::size_t n = 0; n < e_history.size(); ++n) {
        const double t_n = static_cast<double>(n) * dt;
        if (t_eval - t_n < 0.5 * dt * (1.0 - 1e-12)) {
            break;
        }
        sum += e_history[n] * tgm::green_function(pole, t_eval, t_n, dt);
    }
    return scale * sum;
}

OdeTrace green_rk4(const dispersion::LorentzPole& pole, double t_n, double dt, double t_end, double fine_step,
                   std::size_t record_stride) {
    dispersion::validate(pole);
    require_fine(fine_step, dt);
    const std::size_t m = substeps(dt, fine_step);
    const double h = dt / static_cast<double>(m);
    const double start = t_n - 0.5 * dt;
    const double impulse_end = t_n + 0.5 * dt;

    Oscillator osc(pole, record_stride);
    osc.record(start);
    osc.integrate([](double) { return 1.0; }, start, h, m);
    if (t_end > impulse_end) {
        const auto tail = static_cast<std::size_t>(std::ceil((t_end - impulse_end) / h - 1e-9));
        osc.integrate([](double) { return 0.0; }, impulse_end, h, tail);
    }
    return osc.take();
}

OdeTrace polarization_rk4(std::span<const double> e_samples, const dispersion::LorentzPole& pole, double dt,
                          double fine_step, std::size_t record_stride) {
    dispersion::validate(pole);
    require_fine(fine_step, dt);
    const double scale = constants::epsilon0 * pole.delta_eps * pole.omega_p * pole.omega_p;
    const std::size_t m = substeps(dt, fine_step);
    const double h = dt / static_cast<double>(m);

    Oscillator osc(pole, record_stride);
    osc.record(-0.5 * dt);
    for (std::size_t n = 0; n < e_samples.size(); ++n) {
        const double forcing = scale * e_samples[n];
        const double seg_start = (static_cast<double>(n) - 0.5) * dt;
        osc.integrate([forcing](double) { return forcing; }, seg_start, h, m);
    }
    return osc.take();
}

OdeTrace polarization_rk4(const std::function<double(double)>& drive, const dispersion::LorentzPole& pole,
                          double t_start, double t_end, double fine_step, std::size_t record_stride) {
    dispersion::validate(pole);
    if (!(fine_step > 0.0) || !(t_end > t_start)) {
        throw std::invalid_argument("polarization_rk4 requires fine_step > 0 and t_end > t_start");
    }
    const double scale = constants::epsilon0 * pole.delta_eps * pole.omega_p * pole.omega_p;
    const std::size_t steps = substeps(t_end - t_start, fine_step);
    const double h = (t_end - t_start) / static_cast<double>(steps);

    Oscillator osc(pole, record_stride);
    osc.record(t_start);
    osc.integrate([&](double t) { return scale * drive(t); }, t_start, h, steps);
    return osc.take();
}

double ConvergenceStudy::min_observed_order() const {
    double order = std::numeric_limits<double>::infinity();
    for (double r : reduction_factors) {
        order = std::min(order, std::log2(r));
    }
    return order;
}

ConvergenceStudy sinusoid_convergence(const dispersion::LorentzPole& pole, double omega_drive, double duration,
                                      double dt_coarsest, std::size_t levels) {
    // Fine steps per half step of the coarse scheme; keeps t_n + dt/2 on the RK4 mesh.
    constexpr std::size_t kSub = 100;
    auto drive = [omega_drive](double t) { return t >= 0.0 ? std::sin(omega_drive * t) : 0.0; };

    ConvergenceStudy study;
    double dt = dt_coarsest;
    for (std::size_t level = 0; level < levels; ++level, dt *= 0.5) {
        const auto n_steps = static_cast<std::size_t>(std::llround(duration / dt));
        const auto coeffs = tgm::make_coefficients(pole, dt);
        tgm::PoleState state;
        std::vector<double> p_tgm(n_steps);
        for (std::size_t n = 0; n < n_steps; ++n) {
            tgm::advance_in_place(state, drive(static_cast<double>(n) * dt), coeffs);
            p_tgm[n] = tgm::polarization_half_step(state, coeffs);
        }

        // Trace points every dt/2 starting at t = 0; t_n + dt/2 is point 2n + 1.
        const double t_end = (static_cast<double>(n_steps) - 0.5) * dt;
        const auto exact = polarization_rk4(drive, pole, 0.0, t_end, 0.5 * dt / kSub, kSub);
        double max_err = 0.0;
        double max_ref = 0.0;
        for (std::size_t n = 0; n < n_steps; ++n) {
            const double ref = exact.values.at(2 * n + 1);
            max_err = std::max(max_err, std::abs(p_tgm[n] - ref));
            max_ref = std::max(max_ref, std::abs(ref));
        }
        study.levels.push_back({dt, max_ref > 0.0 ? max_err / max_ref : max_err});
    }
    for (std::size_t k = 0; k + 1 < study.levels.size(); ++k) {
        study.reduction_factors.push_back(study.levels[k].max_error / study.levels[k + 1].max_error);
    }
    return study;
}

}  // namespace gfdtd::oracle
