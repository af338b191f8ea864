#pragma once
#include "gfdtd/config.hpp"
#include "gfdtd/constants.hpp"
#include "gfdtd/dispersion.hpp"

namespace gfdtd::test {

inline dispersion::LorentzPole table1_pole() {
    const double wp = 2.0 * constants::pi * 20.0e9;
    return {3.0, wp, 0.1 * wp};
}

inline dispersion::Medium table1_medium() {
    dispersion::Medium m;
    m.eps_inf = 1.5;
    m.poles.push_back(table1_pole());
    return m;
}

// Grid step of the default experiment, 0.9 dx / c.
inline double table1_dt() { return SimConfig{}.dt(); }

}  // namespace gfdtd::test
