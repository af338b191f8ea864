#include "gfdtd/commands.hpp"

#include "gfdtd/analysis.hpp"
#include "gfdtd/checks.hpp"
#include "gfdtd/constants.hpp"
#include "gfdtd/csv.hpp"
#include "gfdtd/errors.hpp"
#include "gfdtd/fdtd.hpp"
#include "gfdtd/oracle.hpp"
#include "gfdtd/tgm.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>

namespace gfdtd::commands {

namespace {

ProbeSeries run_single_probe(SimConfig config, std::size_t node) {
    auto sim = fdtd::build_simulation(config);
    const std::size_t nodes[] = {node};
    return std::move(sim.run(config.n_steps, nodes).front());
}

ErrorSummary summarize(const std::vector<ReflectionRow>& rows, double ReflectionRow::*column) {
    ErrorSummary s;
    double sq = 0.0;
    for (const auto& row : rows) {
        const double err = std::abs(row.*column - row.r_analytic);
        s.max_abs = std::max(s.max_abs, err);
        sq += err * err;
    }
    s.rms = rows.empty() ? 0.0 : std::sqrt(sq / static_cast<double>(rows.size()));
    return s;
}

std::string sci(double v) { return csv::format_number(v); }

}  // namespace

ReflectionReport reflection_experiment(const SimConfig& config) {
    validate(config);
    const std::size_t node = config.probe_node(config.probes.front());
    if (node >= config.interface_node()) {
        throw ConfigError("the first probe must lie in the vacuum region for reflection extraction");
    }

    SimConfig reference = config;
    reference.medium = dispersion::Medium::vacuum();
    reference.method = Method::tgm;
    SimConfig with_tgm = config;
    with_tgm.method = Method::tgm;
    SimConfig with_ade = config;
    with_ade.method = Method::adem;

    auto ref_run = std::async(std::launch::async, run_single_probe, reference, node);
    auto tgm_run = std::async(std::launch::async, run_single_probe, with_tgm, node);
    auto ade_run = std::async(std::launch::async, run_single_probe, with_ade, node);
    const ProbeSeries incident = ref_run.get();
    const ProbeSeries total_tgm = tgm_run.get();
    const ProbeSeries total_ade = ade_run.get();

    const auto r_tgm = analysis::reflection_magnitude(incident, total_tgm, config.band_threshold);
    const auto r_ade = analysis::reflection_magnitude(incident, total_ade, config.band_threshold);

    ReflectionReport report;
    report.band_threshold = config.band_threshold;
    report.probe_node = node;
    report.rows.reserve(r_tgm.size());
    for (std::size_t k = 0; k < r_tgm.size(); ++k) {
        const double f = r_tgm[k].freq_hz;
        const double analytic = std::abs(dispersion::reflection_coefficient(config.medium, 2.0 * constants::pi * f));
        report.rows.push_back({f, analytic, r_tgm[k].magnitude, r_ade[k].magnitude});
    }
    report.tgm = summarize(report.rows, &ReflectionRow::r_tgm);
    report.adem = summarize(report.rows, &ReflectionRow::r_adem);
    return report;
}

std::string reflection_csv(const ReflectionReport& report) {
    std::string out;
    csv::append_header(out, "freq_hz,r_analytic,r_tgm,r_adem");
    for (const auto& row : report.rows) {
        csv::append_row(out, {row.freq_hz, row.r_analytic, row.r_tgm, row.r_adem});
    }
    return out;
}

std::string reflection_summary(const ReflectionReport& report) {
    std::ostringstream out;
    out << "probe node " << report.probe_node << ", band threshold " << sci(report.band_threshold) << ", "
        << report.rows.size() << " bins";
    if (!report.rows.empty()) {
        out << " from " << sci(report.rows.front().freq_hz) << " Hz to " << sci(report.rows.back().freq_hz) << " Hz";
    }
    out << "\n";
    out << "tgm  vs analytic: max abs error " << sci(report.tgm.max_abs) << ", rms " << sci(report.tgm.rms) << "\n";
    out << "adem vs analytic: max abs error " << sci(report.adem.max_abs) << ", rms " << sci(report.adem.rms) << "\n";
    return out.str();
}

std::string run_csv(const SimConfig& config) {
    auto sim = fdtd::build_simulation(config);
    const auto nodes = config.probe_nodes();
    const auto series = sim.run(config.n_steps, nodes);

    std::string out;
    std::string header = "time_s";
    for (std::size_t k = 0; k < series.size(); ++k) {
        header += ",probe" + std::to_string(k + 1);
    }
    csv::append_header(out, header);
    std::vector<double> row(series.size() + 1);
    for (std::size_t n = 0; n < config.n_steps; ++n) {
        row[0] = static_cast<double>(n) * sim.dt();
        for (std::size_t k = 0; k < series.size(); ++k) {
            row[k + 1] = series[k].samples[n];
        }
        csv::append_row(out, row);
    }
    return out;
}

GreenTable green_comparison(const dispersion::LorentzPole& pole, double dt, const GreenOptions& options) {
    dispersion::validate(pole);
    if (!(dt > 0.0)) {
        throw std::invalid_argument("green comparison requires dt > 0");
    }
    const double t_start = options.t_start.value_or(0.5 * dt);
    if (t_start < 0.5 * dt * (1.0 - 1e-12)) {
        throw DomainError("green comparison requested before the impulse ends (t < t_n + dt/2)");
    }
    const double t_end = options.t_end.value_or(t_start + 5.0 * 2.0 * constants::pi / pole.omega_p);
    if (!(t_end > t_start) || options.samples == 0) {
        throw std::invalid_argument("green comparison requires t_end > t_start and samples > 0");
    }

    const double fine_step = dt / options.fine_ratio;
    const auto fine_steps = static_cast<std::size_t>(std::ceil((t_end + 0.5 * dt) / fine_step));
    const std::size_t stride = std::max<std::size_t>(1, fine_steps / options.samples);
    const auto trace = oracle::green_rk4(pole, 0.0, dt, t_end, fine_step, stride);

    GreenTable table;
    for (std::size_t k = 0; k < trace.times.size(); ++k) {
        const double t = trace.times[k];
        if (t < t_start * (1.0 - 1e-12)) {
            continue;
        }
        const double closed = tgm::green_function(pole, std::max(t, 0.5 * dt), 0.0, dt);
        const double diff = std::abs(closed - trace.values[k]);
        table.rows.push_back({t, closed, trace.values[k], diff});
        table.max_abs_diff = std::max(table.max_abs_diff, diff);
        table.max_abs_g = std::max(table.max_abs_g, std::abs(trace.values[k]));
    }
    return table;
}

std::string green_csv(const GreenTable& table) {
    std::string out;
    csv::append_header(out, "t_s,g_closed_form,g_rk4,abs_diff");
    for (const auto& row : table.rows) {
        csv::append_row(out, {row.t, row.g_closed_form, row.g_rk4, row.abs_diff});
    }
    return out;
}

namespace {

CheckResult make_check(std::string name, bool ok, const std::string& measured, const std::string& bound) {
    return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, measured + " (bound " + bound + ")"};
}

void verify_pole(std::vector<CheckResult>& out, const std::string& tag, const dispersion::LorentzPole& pole, double dt,
                 const VerifyOptions& options) {
    const auto history = checks::random_history(options.history_length, options.seed);

    {
        const double err = checks::recurrence_vs_direct_sum(pole, dt, history, options.propagator_fault);
        out.push_back(make_check(tag + "recurrence == direct sum", err < 1e-10, "rel err " + sci(err), "1e-10"));
    }

    if (dispersion::is_underdamped(pole)) {
        const auto sym = checks::symmetry_under_drive(pole, dt, history);
        out.push_back(make_check(tag + "conjugacy F- == conj(F+)", sym.conjugacy_error < 1e-12,
                                 "rel err " + sci(sym.conjugacy_error), "1e-12"));
    } else {
        out.push_back({tag + "conjugacy F- == conj(F+)", CheckStatus::skipped, "skipped (overdamped)"});
    }

    {
        const auto sym = checks::symmetry_under_drive(pole, dt, history);
        const double worst = std::max(sym.polarization_residual, sym.current_residual);
        out.push_back(make_check(tag + "realness of P and dP/dt", worst < tgm::kImagTolerance,
                                 "P " + sci(sym.polarization_residual) + ", dP/dt " + sci(sym.current_residual),
                                 "1e-10"));
    }

    {
        const double growth = checks::max_growth_under_zero_drive(pole, dt, history, 1000);
        const double bound = pole.delta_p > 0.0 ? 1.0 : 1.0 + 4.0 * DBL_EPSILON;
        const bool ok = pole.delta_p > 0.0 ? growth < bound : growth <= bound;
        out.push_back(make_check(tag + "non-amplification under zero drive", ok, "max |F| ratio " + sci(growth),
                                 pole.delta_p > 0.0 ? "< 1" : "<= 1 + 4 eps"));
    }

    if (pole.delta_p > 0.0) {
        // ten time constants of the slowest mode; equals 10/delta_p unless overdamped
        const auto roots = dispersion::pole_roots(pole);
        const double duration = 10.0 / std::min(roots.plus.imag(), roots.minus.imag());
        const double tgm_err = checks::tgm_steady_state_error(pole, dt, 1.0, duration);
        const double ade_err = checks::ade_steady_state_error(pole, dt, 1.0, duration);
        out.push_back(make_check(tag + "steady state (tgm)", tgm_err < 1e-3, "rel err " + sci(tgm_err), "1e-3"));
        out.push_back(make_check(tag + "steady state (adem)", ade_err < 1e-3, "rel err " + sci(ade_err), "1e-3"));
    } else {
        out.push_back({tag + "steady state (tgm)", CheckStatus::skipped, "skipped (undamped)"});
        out.push_back({tag + "steady state (adem)", CheckStatus::skipped, "skipped (undamped)"});
    }

    {
        const double err = checks::ade_fixed_point_error(pole, dt, 1.0);
        out.push_back(make_check(tag + "adem fixed point", err <= 8.0 * DBL_EPSILON, "rel change " + sci(err),
                                 "8 eps"));
    }

    {
        const auto green = green_comparison(pole, dt);
        const double err = green.relative_error();
        out.push_back(make_check(tag + "green closed form vs rk4", err < 1e-6, "rel err " + sci(err), "1e-6"));
    }

    {
        const double dt0 = 0.1 / pole.omega_p;
        const auto study = oracle::sinusoid_convergence(pole, 0.5 * pole.omega_p, 40.0 / pole.omega_p, dt0, 3);
        const double order = study.min_observed_order();
        out.push_back(make_check(tag + "temporal convergence order", order >= 1.85, "order " + sci(order), ">= 1.85"));
    }
}

}  // namespace

std::vector<CheckResult> verify(const SimConfig& config, const VerifyOptions& options) {
    validate(config);
    std::vector<CheckResult> out;
    const auto& poles = config.medium.poles;
    if (poles.empty()) {
        out.push_back({"dispersive checks", CheckStatus::skipped, "skipped (no poles in medium)"});
    }
    for (std::size_t p = 0; p < poles.size(); ++p) {
        verify_pole(out, "pole " + std::to_string(p + 1) + ": ", poles[p], config.dt(), options);
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::none_of(results.begin(), results.end(),
                        [](const CheckResult& r) { return r.status == CheckStatus::fail; });
}

std::string verify_report(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        const char* tag = r.status == CheckStatus::pass ? "PASS" : r.status == CheckStatus::fail ? "FAIL" : "SKIP";
        out << "[" << tag << "] " << r.name << ": " << r.detail << "\n";
    }
    out << (all_passed(results) ? "all checks passed" : "verification FAILED") << "\n";
    return out.str();
}

}  // namespace gfdtd::commands
