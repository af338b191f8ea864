#pragma once

namespace gfdtd::fdtd {

/// exp(-(t - t0)^2 / (2 dT^2)) cos(w0 (t - t0)), applied as a hard source at node 0.
struct GaussianSource {
    double t0 = 0.0;       ///< s
    double delta_t = 0.0;  ///< s
    double omega0 = 0.0;   ///< rad/s
};

double source_value(const GaussianSource& src, double t);

/// First-order Mur update for a boundary node in vacuum.
double mur_update(double e_boundary_old, double e_neighbor_old, double e_neighbor_new, double dx, double dt);

}  // namespace gfdtd::fdtd
