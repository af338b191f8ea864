#include "gfdtd/fdtd.hpp"

#include "gfdtd/constants.hpp"
#include "gfdtd/errors.hpp"

#include <stdexcept>
#include <string>

#if defined(__SSE2__)
#include <immintrin.h>
#endif

namespace gfdtd::fdtd {

namespace {

// The numerical precursor ahead of a wavefront decays into subnormal values,
// which are orders of magnitude slower on x86. Flush them to zero while stepping.
class FlushSubnormals {
public:
    FlushSubnormals() {
#if defined(__SSE2__)
        saved_ = _mm_getcsr();
        _mm_setcsr(saved_ | 0x8040u);  // FTZ | DAZ
#endif
    }
    ~FlushSubnormals() {
#if defined(__SSE2__)
        _mm_setcsr(saved_);
#endif
    }
    FlushSubnormals(const FlushSubnormals&) = delete;
    FlushSubnormals& operator=(const FlushSubnormals&) = delete;

private:
    unsigned saved_ = 0;
};

}  // namespace

Simulation::Simulation(const SimConfig& config)
    : source_(config.source), boundary_(config.boundary), method_(config.method) {
    validate(config);

    const std::size_t n = config.node_count();
    grid_.dx = config.dx();
    grid_.dt = config.dt();
    grid_.e.assign(n, 0.0);
    grid_.b.assign(n - 1, 0.0);
    grid_.medium_index.assign(n, 0);

    media_.push_back({dispersion::Medium::vacuum(), {}, {}});
    MediumEntry half_space{config.medium, {}, {}};
    for (const auto& pole : config.medium.poles) {
        if (method_ == Method::tgm) {
            half_space.tgm.push_back(tgm::make_coefficients(pole, grid_.dt));
        } else {
            half_space.ade.push_back(ade::make_coefficients(pole, grid_.dt));
        }
    }
    media_.push_back(std::move(half_space));

    for (std::size_t i = config.interface_node(); i < n; ++i) {
        grid_.medium_index[i] = 1;
    }

    e_coef_.resize(n);
    sigma_.resize(n);
    current_.assign(n, 0.0);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& m = media_[grid_.medium_index[i]].medium;
        e_coef_[i] = grid_.dt / (constants::epsilon0 * m.eps_inf);
        sigma_[i] = m.sigma;
        if (m.dispersive()) {
            dispersive_nodes_.push_back(i);
            state_offset_.push_back(offset);
            offset += m.poles.size();
        }
    }
    if (method_ == Method::tgm) {
        tgm_states_.assign(offset, {});
    } else {
        ade_states_.assign(offset, {});
    }
}

bool Simulation::source_active() const noexcept { return time() < 2.0 * source_.t0; }

void Simulation::inject_source() {
    if (source_active()) {
        grid_.e[0] = source_value(source_, time());
    }
}

void Simulation::update_pole_states() {
    const auto& e = grid_.e;
    const std::size_t count = dispersive_nodes_.size();
    if (method_ == Method::tgm) {
        for (std::size_t k = 0; k < count; ++k) {
            const std::size_t node = dispersive_nodes_[k];
            const auto& coeffs = media_[grid_.medium_index[node]].tgm;
            tgm::PoleState* states = tgm_states_.data() + state_offset_[k];
            const double e_now = e[node];
            double j = 0.0;
            for (std::size_t p = 0; p < coeffs.size(); ++p) {
                tgm::advance_in_place(states[p], e_now, coeffs[p]);
                j += tgm::polarization_current_half_step(states[p], coeffs[p]);
            }
            current_[node] = j;
        }
    } else {
        for (std::size_t k = 0; k < count; ++k) {
            const std::size_t node = dispersive_nodes_[k];
            const auto& coeffs = media_[grid_.medium_index[node]].ade;
            ade::PoleState* states = ade_states_.data() + state_offset_[k];
            const double e_now = e[node];
            double j = 0.0;
            for (std::size_t p = 0; p < coeffs.size(); ++p) {
                ade::advance_in_place(states[p], e_now, coeffs[p]);
                j += ade::current_half_step(states[p], grid_.dt);
            }
            current_[node] = j;
        }
    }
}

void Simulation::advance() {
    const FlushSubnormals ftz;
    auto& e = grid_.e;
    auto& b = grid_.b;
    const std::size_t n = e.size();
    const double dt_dx = grid_.dt / grid_.dx;
    const double inv_mu0_dx = 1.0 / (constants::mu0 * grid_.dx);

    update_pole_states();

    for (std::size_t i = 0; i + 1 < n; ++i) {
        b[i] -= dt_dx * (e[i + 1] - e[i]);
    }

    const double left_old = e[0];
    const double left_neighbor_old = e[1];
    const double right_old = e[n - 1];
    const double right_neighbor_old = e[n - 2];

    for (std::size_t i = 1; i + 1 < n; ++i) {
        e[i] += e_coef_[i] * (-(b[i] - b[i - 1]) * inv_mu0_dx - sigma_[i] * e[i] - current_[i]);
    }

    if (boundary_ == Boundary::mur) {
        e[0] = mur_update(left_old, left_neighbor_old, e[1], grid_.dx, grid_.dt);
        e[n - 1] = mur_update(right_old, right_neighbor_old, e[n - 2], grid_.dx, grid_.dt);
    } else {
        e[0] = 0.0;
        e[n - 1] = 0.0;
    }
    ++steps_;
}

std::vector<ProbeSeries> Simulation::run(std::size_t n_steps, std::span<const std::size_t> probe_nodes) {
    std::vector<ProbeSeries> series;
    series.reserve(probe_nodes.size());
    for (std::size_t node : probe_nodes) {
        if (node >= node_count()) {
            throw std::out_of_range("probe node " + std::to_string(node) + " outside grid of " +
                                    std::to_string(node_count()) + " nodes");
        }
        series.push_back({node, grid_.dt, {}});
        series.back().samples.reserve(n_steps);
    }
    for (std::size_t s = 0; s < n_steps; ++s) {
        inject_source();
        for (auto& probe : series) {
            probe.samples.push_back(grid_.e[probe.node_index]);
        }
        advance();
    }
    return series;
}

Simulation build_simulation(const SimConfig& config) { return Simulation(config); }

}  // namespace gfdtd::fdtd
