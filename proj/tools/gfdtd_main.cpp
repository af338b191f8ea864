// gfdtd: 1D FDTD with Lorentz media via the transient Green recurrence.
//
//   gfdtd run|reflection|green|verify --config <path> [--out <path>]
//
// Exit status: 0 success, 1 usage or configuration error, 2 verification failure.

#include "gfdtd/commands.hpp"
#include "gfdtd/config.hpp"
#include "gfdtd/errors.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

// Writes to `path` when set, else standard output. Returns true when written to a file.
bool emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return false;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw gfdtd::ConfigError("cannot open output file " + path);
    }
    out << text;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D FDTD solver for Lorentz-dispersive media (transient Green recurrence and ADE baseline)"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "Experiment config file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "Output CSV path (default: run.output from the config, else stdout)");
    };

    auto* run = app.add_subcommand("run", "Single simulation; CSV of raw probe series");
    add_common(run);

    auto* reflection = app.add_subcommand("reflection", "Vacuum/TGM/ADE runs; CSV of |R|(f) against the analytic value");
    add_common(reflection);

    auto* green = app.add_subcommand("green", "Closed-form Green function against RK4 of its ODE");
    add_common(green);
    gfdtd::commands::GreenOptions green_opts;
    std::size_t pole_number = 1;
    std::optional<double> t_start;
    std::optional<double> t_end;
    green->add_option("--pole", pole_number, "1-based pole index in the medium")->check(CLI::PositiveNumber);
    green->add_option("--t-start", t_start, "First sample time after the impulse centre, s (default dt/2)");
    green->add_option("--t-end", t_end, "Last sample time, s (default five resonance periods)");
    green->add_option("--samples", green_opts.samples, "Approximate number of rows")->check(CLI::PositiveNumber);
    green->add_option("--fine-ratio", green_opts.fine_ratio, "RK4 steps per dt (>= 100)")->check(CLI::Range(100.0, 1e7));

    auto* verify = app.add_subcommand("verify", "Invariant suite; exit status 2 on any failure");
    add_common(verify);
    gfdtd::commands::VerifyOptions verify_opts;
    verify->add_option("--fault-propagator", verify_opts.propagator_fault,
                       "Fault injection: relative perturbation of the TGM propagators")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const auto config = gfdtd::load_config(config_path);
        const std::string output = out_path.empty() ? config.output : out_path;

        if (run->parsed()) {
            emit(gfdtd::commands::run_csv(config), output);
        } else if (reflection->parsed()) {
            const auto report = gfdtd::commands::reflection_experiment(config);
            const bool to_file = emit(gfdtd::commands::reflection_csv(report), output);
            (to_file ? std::cout : std::cerr) << gfdtd::commands::reflection_summary(report);
        } else if (green->parsed()) {
            if (pole_number > config.medium.poles.size()) {
                throw gfdtd::ConfigError("--pole " + std::to_string(pole_number) + " but the medium has " +
                                         std::to_string(config.medium.poles.size()) + " poles");
            }
            green_opts.pole_index = pole_number - 1;
            green_opts.t_start = t_start;
            green_opts.t_end = t_end;
            const auto table = gfdtd::commands::green_comparison(config.medium.poles[green_opts.pole_index],
                                                                 config.dt(), green_opts);
            const bool to_file = emit(gfdtd::commands::green_csv(table), output);
            (to_file ? std::cout : std::cerr) << "max |closed - rk4| / max |g| = " << table.relative_error() << "\n";
        } else if (verify->parsed()) {
            const auto results = gfdtd::commands::verify(config, verify_opts);
            const std::string report = gfdtd::commands::verify_report(results);
            std::cout << report;
            if (!out_path.empty()) {
                emit(report, out_path);
            }
            return gfdtd::commands::all_passed(results) ? kExitOk : kExitVerifyFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
