#pragma once

// 1D Yee leapfrog solver for E_y / B_z in SI units with per-node media.
//
//   dB/dt = -dE/dx
//   eps0 eps_inf dE/dt = -(1/mu0) dB/dx - sigma E - sum_p dP_p/dt
//
// E lives on integer nodes and integer steps, B on half nodes and half steps.

#include "gfdtd/ade.hpp"
#include "gfdtd/config.hpp"
#include "gfdtd/dispersion.hpp"
#include "gfdtd/probe.hpp"
#include "gfdtd/source.hpp"
#include "gfdtd/tgm.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gfdtd::fdtd {

struct Grid1D {
    std::vector<double> e;                   ///< V/m, size N
    std::vector<double> b;                   ///< T, size N - 1
    std::vector<std::uint8_t> medium_index;  ///< per E node, into the simulation's medium table
    double dx = 0.0;
    double dt = 0.0;
};

class Simulation {
public:
    /// Media table: index 0 is vacuum, index 1 the right half-space medium.
    Simulation(const SimConfig& config);

    /// Overwrites E at node 0 with the Gaussian while the hard source is active (t < 2 t0).
    void inject_source();

    /// Pole states with E^N, B to N+1/2, E to N+1, boundaries. Assumes the source was injected.
    void advance();

    void step() {
        inject_source();
        advance();
    }

    /// Records E^n at each probe after source injection, for n = 0 .. n_steps-1.
    std::vector<ProbeSeries> run(std::size_t n_steps, std::span<const std::size_t> probe_nodes);

    const Grid1D& grid() const noexcept { return grid_; }
    std::span<const double> e() const noexcept { return grid_.e; }
    std::span<const double> b() const noexcept { return grid_.b; }
    std::size_t node_count() const noexcept { return grid_.e.size(); }
    double dx() const noexcept { return grid_.dx; }
    double dt() const noexcept { return grid_.dt; }
    std::size_t steps_taken() const noexcept { return steps_; }
    double time() const noexcept { return static_cast<double>(steps_) * grid_.dt; }
    Method method() const noexcept { return method_; }
    bool source_active() const noexcept;

    const dispersion::Medium& medium(std::size_t index) const { return media_.at(index).medium; }
    double eps_inf_at(std::size_t node) const { return media_[grid_.medium_index.at(node)].medium.eps_inf; }

    std::span<const std::size_t> dispersive_nodes() const noexcept { return dispersive_nodes_; }
    std::span<const tgm::PoleState> tgm_states() const noexcept { return tgm_states_; }
    std::span<const ade::PoleState> ade_states() const noexcept { return ade_states_; }
    /// Total allocated per-node, per-pole states (of the active method).
    std::size_t pole_state_count() const noexcept { return tgm_states_.size() + ade_states_.size(); }

private:
    struct MediumEntry {
        dispersion::Medium medium;
        std::vector<tgm::PoleCoefficients> tgm;
        std::vector<ade::Coefficients> ade;
    };

    void update_pole_states();

    Grid1D grid_;
    GaussianSource source_;
    Boundary boundary_;
    Method method_;
    std::vector<MediumEntry> media_;

    std::vector<double> e_coef_;  ///< dt / (eps0 eps_inf), per node
    std::vector<double> sigma_;   ///< per node
    std::vector<double> current_; ///< sum_p dP/dt at N+1/2, per node

    std::vector<std::size_t> dispersive_nodes_;
    std::vector<std::size_t> state_offset_;  ///< per dispersive node, into the state arrays
    std::vector<tgm::PoleState> tgm_states_;
    std::vector<ade::PoleState> ade_states_;

    std::size_t steps_ = 0;
};

/// Validates the config (ConfigError on violation) and returns a zeroed simulation.
Simulation build_simulation(const SimConfig& config);

}  // namespace gfdtd::fdtd
