#include "gfdtd/config.hpp"

#include "gfdtd/constants.hpp"
#include "gfdtd/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gfdtd {

const char* to_string(Method method) noexcept { return method == Method::tgm ? "tgm" : "adem"; }

double SimConfig::dt() const noexcept { return cfl_factor * dx() / constants::c; }

std::size_t SimConfig::node_count() const noexcept {
    return n_grid + static_cast<std::size_t>(std::llround(half_space_extension / dx()));
}

std::size_t SimConfig::probe_node(double fraction) const noexcept {
    return static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n_grid - 1)));
}

std::vector<std::size_t> SimConfig::probe_nodes() const {
    std::vector<std::size_t> nodes;
    nodes.reserve(probes.size());
    for (double f : probes) {
        nodes.push_back(probe_node(f));
    }
    return nodes;
}

void validate(const SimConfig& config) {
    if (!(config.system_length > 0.0) || !std::isfinite(config.system_length)) {
        throw ConfigError("grid.length must be > 0");
    }
    if (config.n_grid < 16) {
        throw ConfigError("grid.nodes must be >= 16");
    }
    if (!(config.cfl_factor > 0.0 && config.cfl_factor <= 1.0)) {
        throw ConfigError("CFL condition violated: grid.cfl must satisfy 0 < cfl <= 1");
    }
    if (!(config.half_space_extension >= 0.0) || !std::isfinite(config.half_space_extension)) {
        throw ConfigError("grid.extension must be >= 0");
    }
    if (!(config.source.delta_t > 0.0) || !std::isfinite(config.source.delta_t)) {
        throw ConfigError("source.width must be > 0");
    }
    if (!std::isfinite(config.source.t0) || !std::isfinite(config.source.omega0)) {
        throw ConfigError("source.t0 and source.omega0 must be finite");
    }
    try {
        dispersion::validate(config.medium);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("medium: ") + e.what());
    }
    if (config.probes.empty()) {
        throw ConfigError("run.probes must list at least one position");
    }
    for (double f : config.probes) {
        if (!(f > 0.0 && f < 1.0)) {
            throw ConfigError("run.probes fractions must lie in (0, 1)");
        }
    }
    if (!(config.band_threshold > 0.0 && config.band_threshold <= 1.0)) {
        throw ConfigError("run.band_threshold must lie in (0, 1]");
    }
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, std::size_t line) {
    double value = 0.0;
    // from_chars rejects a leading '+'.
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigError("expected a number, got '" + std::string(text) + "'", line);
    }
    return value;
}

std::size_t parse_count(std::string_view text, std::size_t line) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigError("expected a non-negative integer, got '" + std::string(text) + "'", line);
    }
    return value;
}

std::vector<double> parse_list(std::string_view text, std::size_t line) {
    std::vector<double> values;
    while (true) {
        const auto comma = text.find(',');
        values.push_back(parse_double(trim(text.substr(0, comma)), line));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return values;
}

struct PartialPole {
    std::map<std::string, double> fields;
    std::size_t line = 0;
};

constexpr std::string_view kPolePrefix = "medium.pole.";

}  // namespace

SimConfig parse_config(std::string_view text) {
    SimConfig config;
    std::string section;
    std::set<std::string> seen;
    std::map<std::size_t, PartialPole> poles;
    std::size_t line_no = 0;

    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("unterminated section header", line_no);
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section.starts_with(kPolePrefix)) {
                const auto k = parse_count(std::string_view(section).substr(kPolePrefix.size()), line_no);
                if (k == 0) {
                    throw ConfigError("pole sections are numbered from 1", line_no);
                }
                if (poles.contains(k)) {
                    throw ConfigError("duplicate section [" + section + "]", line_no);
                }
                poles[k].line = line_no;
            } else if (section != "grid" && section != "source" && section != "medium" && section != "run") {
                throw ConfigError("unknown section [" + section + "]", line_no);
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("expected 'key = value'", line_no);
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (section.empty()) {
            throw ConfigError("key '" + key + "' outside of any section", line_no);
        }
        if (value.empty()) {
            throw ConfigError("missing value for '" + key + "'", line_no);
        }
        if (!seen.insert(section + "." + key).second) {
            throw ConfigError("duplicate key '" + key + "' in [" + section + "]", line_no);
        }

        auto unknown = [&] { return ConfigError("unknown key '" + key + "' in [" + section + "]", line_no); };

        if (section == "grid") {
            if (key == "length") {
                config.system_length = parse_double(value, line_no);
            } else if (key == "nodes") {
                config.n_grid = parse_count(value, line_no);
            } else if (key == "cfl") {
                config.cfl_factor = parse_double(value, line_no);
            } else if (key == "extension") {
                config.half_space_extension = parse_double(value, line_no);
            } else if (key == "boundary") {
                if (value == "mur") {
                    config.boundary = Boundary::mur;
                } else if (value == "pec") {
                    config.boundary = Boundary::pec;
                } else {
                    throw ConfigError("grid.boundary must be 'mur' or 'pec'", line_no);
                }
            } else {
                throw unknown();
            }
        } else if (section == "source") {
            if (key == "t0") {
                config.source.t0 = parse_double(value, line_no);
            } else if (key == "width") {
                config.source.delta_t = parse_double(value, line_no);
            } else if (key == "omega0") {
                config.source.omega0 = parse_double(value, line_no);
            } else {
                throw unknown();
            }
        } else if (section == "medium") {
            if (key == "eps_inf") {
                config.medium.eps_inf = parse_double(value, line_no);
            } else if (key == "sigma") {
                config.medium.sigma = parse_double(value, line_no);
            } else {
                throw unknown();
            }
        } else if (section == "run") {
            if (key == "steps") {
                config.n_steps = parse_count(value, line_no);
            } else if (key == "probes") {
                config.probes = parse_list(value, line_no);
            } else if (key == "method") {
                if (value == "tgm") {
                    config.method = Method::tgm;
                } else if (value == "adem") {
                    config.method = Method::adem;
                } else {
                    throw ConfigError("run.method must be 'tgm' or 'adem'", line_no);
                }
            } else if (key == "band_threshold") {
                config.band_threshold = parse_double(value, line_no);
            } else if (key == "output") {
                config.output = std::string(value);
            } else {
                throw unknown();
            }
        } else {
            const auto k = parse_count(std::string_view(section).substr(kPolePrefix.size()), line_no);
            if (key != "delta_eps" && key != "omega_p" && key != "delta_p") {
                throw unknown();
            }
            poles[k].fields[key] = parse_double(value, line_no);
        }
    }

    for (const char* required : {"grid.length", "grid.nodes", "source.t0", "source.width", "source.omega0"}) {
        if (!seen.contains(required)) {
            throw ConfigError(std::string("missing required key ") + required);
        }
    }

    std::size_t expected = 1;
    for (const auto& [k, partial] : poles) {
        if (k != expected++) {
            throw ConfigError("pole sections must be numbered 1..P without gaps", partial.line);
        }
        for (const char* field : {"delta_eps", "omega_p", "delta_p"}) {
            if (!partial.fields.contains(field)) {
                throw ConfigError(std::string("pole ") + std::to_string(k) + " is missing '" + field + "'",
                                  partial.line);
            }
        }
        config.medium.poles.push_back(
            {partial.fields.at("delta_eps"), partial.fields.at("omega_p"), partial.fields.at("delta_p")});
    }

    validate(config);
    return config;
}

SimConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace gfdtd
