#include "gfdtd/analysis.hpp"

#include "gfdtd/errors.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <mutex>

namespace gfdtd::analysis {

namespace {

// FFTW's planner is not re-entrant.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(void* p) const noexcept { fftw_free(p); }
};

}  // namespace

std::size_t padded_length(std::size_t n) { return std::bit_ceil(std::max<std::size_t>(2 * n, 2)); }

Spectrum spectrum(std::span<const double> samples, double dt) {
    if (samples.empty()) {
        throw AnalysisError("spectrum of an empty series");
    }
    if (!(dt > 0.0)) {
        throw AnalysisError("spectrum requires dt > 0");
    }
    const std::size_t m = padded_length(samples.size());
    const std::size_t bins = m / 2 + 1;

    std::unique_ptr<double, FftwFree> in(static_cast<double*>(fftw_malloc(sizeof(double) * m)));
    std::unique_ptr<fftw_complex, FftwFree> out(
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * bins)));

    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(m), in.get(), out.get(), FFTW_ESTIMATE);
    }
    std::copy(samples.begin(), samples.end(), in.get());
    std::fill(in.get() + samples.size(), in.get() + m, 0.0);
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    Spectrum s;
    s.transform_length = m;
    s.df = 1.0 / (static_cast<double>(m) * dt);
    s.freqs.resize(bins);
    s.amps.resize(bins);
    for (std::size_t k = 0; k < bins; ++k) {
        s.freqs[k] = static_cast<double>(k) * s.df;
        s.amps[k] = dt * std::complex<double>{out.get()[k][0], out.get()[k][1]};
    }
    return s;
}

Spectrum spectrum(const ProbeSeries& series) { return spectrum(series.samples, series.dt); }

double two_sided_energy(const Spectrum& s) {
    const std::size_t last = s.amps.size() - 1;
    double sum = std::norm(s.amps.front()) + std::norm(s.amps[last]);
    for (std::size_t k = 1; k < last; ++k) {
        sum += 2.0 * std::norm(s.amps[k]);
    }
    return sum * s.df;
}

std::vector<ReflectionSample> reflection_magnitude(const ProbeSeries& incident, const ProbeSeries& total,
                                                   double band_threshold) {
    if (incident.node_index != total.node_index || incident.dt != total.dt ||
        incident.samples.size() != total.samples.size()) {
        throw AnalysisError("incident and total series differ in node, dt or length");
    }
    if (incident.samples.empty()) {
        throw AnalysisError("empty probe series");
    }
    std::vector<double> reflected(total.samples.size());
    std::transform(total.samples.begin(), total.samples.end(), incident.samples.begin(), reflected.begin(),
                   std::minus<>{});

    const Spectrum inc = spectrum(incident);
    const Spectrum ref = spectrum(reflected, incident.dt);

    double peak = 0.0;
    for (const auto& a : inc.amps) {
        peak = std::max(peak, std::abs(a));
    }
    if (peak == 0.0) {
        throw AnalysisError("incident spectrum is identically zero");
    }

    std::vector<ReflectionSample> out;
    const double floor = band_threshold * peak;
    for (std::size_t k = 0; k < inc.amps.size(); ++k) {
        const double mag = std::abs(inc.amps[k]);
        if (mag >= floor) {
            out.push_back({inc.freqs[k], std::abs(ref.amps[k]) / mag});
        }
    }
    if (out.empty()) {
        throw AnalysisError("band threshold excludes every frequency bin");
    }
    return out;
}

}  // namespace gfdtd::analysis
