#pragma once

// Experiment orchestration behind the `gfdtd` subcommands. Every command is a
// library call returning data; the CLI only parses arguments and writes files.

#include "gfdtd/config.hpp"
#include "gfdtd/dispersion.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gfdtd::commands {

// ---- reflection ----

struct ReflectionRow {
    double freq_hz = 0.0;
    double r_analytic = 0.0;
    double r_tgm = 0.0;
    double r_adem = 0.0;
};

struct ErrorSummary {
    double max_abs = 0.0;
    double rms = 0.0;
};

struct ReflectionReport {
    std::vector<ReflectionRow> rows;
    ErrorSummary tgm;
    ErrorSummary adem;
    double band_threshold = 0.0;
    std::size_t probe_node = 0;
};

/// Vacuum reference run, TGM run and ADE run (concurrently), |R| extracted at the
/// first probe, analytic |R| at the same DFT bins.
ReflectionReport reflection_experiment(const SimConfig& config);
std::string reflection_csv(const ReflectionReport& report);
std::string reflection_summary(const ReflectionReport& report);

// ---- run ----

/// Single simulation with config.method; CSV `time_s,probe1,...`.
std::string run_csv(const SimConfig& config);

// ---- green ----

struct GreenOptions {
    std::size_t pole_index = 0;     ///< 0-based index into the medium's poles
    std::optional<double> t_start;  ///< default dt/2 (impulse centred on t_n = 0)
    std::optional<double> t_end;    ///< default t_start + 5 resonance periods
    std::size_t samples = 200;
    double fine_ratio = 1000.0;     ///< RK4 fine step = dt / fine_ratio
};

struct GreenRow {
    double t = 0.0;
    double g_closed_form = 0.0;
    double g_rk4 = 0.0;
    double abs_diff = 0.0;
};

struct GreenTable {
    std::vector<GreenRow> rows;
    double max_abs_diff = 0.0;
    double max_abs_g = 0.0;
    double relative_error() const { return max_abs_g > 0.0 ? max_abs_diff / max_abs_g : max_abs_diff; }
};

/// Throws DomainError if t_start < dt/2 and DegeneratePoleError for delta_p == omega_p.
GreenTable green_comparison(const dispersion::LorentzPole& pole, double dt, const GreenOptions& options = {});
std::string green_csv(const GreenTable& table);

// ---- verify ----

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct VerifyOptions {
    /// Test hook: multiplies both TGM propagators by (1 + propagator_fault) in the recurrence check.
    double propagator_fault = 0.0;
    std::uint64_t seed = 0x5eed'2024;
    std::size_t history_length = 2000;
};

std::vector<CheckResult> verify(const SimConfig& config, const VerifyOptions& options = {});
bool all_passed(const std::vector<CheckResult>& results);
std::string verify_report(const std::vector<CheckResult>& results);

}  // namespace gfdtd::commands
