#pragma once

#include "gfdtd/constants.hpp"
#include "gfdtd/dispersion.hpp"
#include "gfdtd/source.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace gfdtd {

enum class Method { tgm, adem };
enum class Boundary { mur, pec };

const char* to_string(Method method) noexcept;

/// Experiment description. Geometry: nodes x_i = i dx over [0, L] with
/// dx = L/(n_grid - 1); nodes with x >= L/2 carry `medium`, the rest are
/// vacuum. `half_space_extension` appends further medium nodes past x = L
/// (same dx) so that the right boundary echo stays out of long records.
struct SimConfig {
    double system_length = 0.05;
    std::size_t n_grid = 3000;
    double cfl_factor = 0.9;
    double half_space_extension = 0.0;
    Boundary boundary = Boundary::mur;

    fdtd::GaussianSource source{1.0e-11, 1.0e-12, 2.0 * constants::pi * 100.0e9};
    dispersion::Medium medium;

    std::size_t n_steps = 32768;
    std::vector<double> probes{0.25, 0.499, 0.75};
    Method method = Method::tgm;
    double band_threshold = 1.0e-3;
    std::string output;

    double dx() const noexcept { return system_length / static_cast<double>(n_grid - 1); }
    double dt() const noexcept;
    /// Total node count including the extension.
    std::size_t node_count() const noexcept;
    /// First node index carrying the right-half medium (2i >= n_grid - 1).
    std::size_t interface_node() const noexcept { return n_grid / 2; }
    std::size_t probe_node(double fraction) const noexcept;
    std::vector<std::size_t> probe_nodes() const;
};

/// Throws ConfigError naming the violated invariant.
void validate(const SimConfig& config);

/// Parses the `key = value` / `[section]` format and validates the result.
SimConfig parse_config(std::string_view text);
SimConfig load_config(const std::filesystem::path& path);

}  // namespace gfdtd
