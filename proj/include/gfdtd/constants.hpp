#pragma once

#include <numbers>

namespace gfdtd::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double c = 2.99792458e8;             // m/s
inline constexpr double mu0 = 4.0e-7 * pi;            // H/m
inline constexpr double epsilon0 = 1.0 / (mu0 * c * c);  // F/m

}  // namespace gfdtd::constants
