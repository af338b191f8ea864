#pragma once

#include "gfdtd/probe.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gfdtd::analysis {

/// One-sided transform, bins k = 0 .. M/2 at f_k = k / (M dt).
/// amps[k] = dt * sum_n x_n exp(-2 pi i k n / M), in (V/m) s.
struct Spectrum {
    std::vector<double> freqs;
    std::vector<std::complex<double>> amps;
    std::size_t transform_length = 0;
    double df = 0.0;
};

/// Smallest power of two >= 2 * n.
std::size_t padded_length(std::size_t n);

Spectrum spectrum(std::span<const double> samples, double dt);
Spectrum spectrum(const ProbeSeries& series);

/// sum |X|^2 df over the full two-sided transform, rebuilt from the one-sided half.
double two_sided_energy(const Spectrum& s);

struct ReflectionSample {
    double freq_hz = 0.0;
    double magnitude = 0.0;
};

/// |DFT(total - incident)| / |DFT(incident)| at bins where |DFT(incident)| is at
/// least band_threshold times its maximum. Both series must share node, dt and length.
std::vector<ReflectionSample> reflection_magnitude(const ProbeSeries& incident, const ProbeSeries& total,
                                                   double band_threshold = 0.01);

}  // namespace gfdtd::analysis
