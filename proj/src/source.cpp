#include "gfdtd/source.hpp"

#include "gfdtd/constants.hpp"

#include <cmath>

namespace gfdtd::fdtd {

double source_value(const GaussianSource& src, double t) {
    const double u = t - src.t0;
    return std::exp(-u * u / (2.0 * src.delta_t * src.delta_t)) * std::cos(src.omega0 * u);
}

double mur_update(double e_boundary_old, double e_neighbor_old, double e_neighbor_new, double dx, double dt) {
    const double cdt = constants::c * dt;
    return e_neighbor_old + (cdt - dx) / (cdt + dx) * (e_neighbor_new - e_boundary_old);
}

}  // namespace gfdtd::fdtd
