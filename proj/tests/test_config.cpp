#include "doctest.h"

#include "gfdtd/config.hpp"
#include "gfdtd/constants.hpp"
#include "gfdtd/errors.hpp"

#include <cmath>
#include <string>

using namespace gfdtd;

namespace {

const std::string kMinimal = R"(
[grid]
length = 0.05
nodes = 3000

[source]
t0 = 1e-11
width = 1e-12
omega0 = 6.283185307179586e11
)";

std::size_t error_line(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("bundled reference config") {
    const SimConfig cfg = load_config(GFDTD_CONFIG_DIR "/table1.cfg");
    CHECK(cfg.system_length == 0.05);
    CHECK(cfg.n_grid == 3000);
    CHECK(cfg.cfl_factor == 0.9);
    CHECK(cfg.half_space_extension == 0.25);
    CHECK(cfg.boundary == Boundary::mur);
    CHECK(cfg.source.t0 == 1.0e-11);
    CHECK(cfg.source.delta_t == 1.0e-12);
    CHECK(cfg.source.omega0 == doctest::Approx(2.0 * constants::pi * 100.0e9).epsilon(1e-15));
    CHECK(cfg.medium.eps_inf == 1.5);
    REQUIRE(cfg.medium.poles.size() == 1);
    const auto& p = cfg.medium.poles[0];
    CHECK(p.delta_eps == 3.0);
    CHECK(p.omega_p == doctest::Approx(2.0 * constants::pi * 20.0e9).epsilon(1e-15));
    CHECK(p.delta_p == doctest::Approx(0.1 * p.omega_p).epsilon(1e-15));
    CHECK(cfg.n_steps == 32768);
    CHECK(cfg.method == Method::tgm);
    CHECK(cfg.band_threshold == 1.0e-3);
    CHECK(cfg.probes.size() == 3);
    CHECK(cfg.dx() == doctest::Approx(0.05 / 2999.0));
    CHECK(cfg.dt() == doctest::Approx(0.9 * cfg.dx() / constants::c));
    CHECK(cfg.dt() == doctest::Approx(5.0e-14).epsilon(0.01));
}

TEST_CASE("minimal config takes defaults") {
    const SimConfig cfg = parse_config(kMinimal);
    CHECK(cfg.medium.eps_inf == 1.0);
    CHECK(cfg.medium.poles.empty());
    CHECK(cfg.cfl_factor == 0.9);
    CHECK(cfg.method == Method::tgm);
    CHECK(cfg.node_count() == 3000);
}

TEST_CASE("method and boundary keywords") {
    const SimConfig cfg = parse_config(kMinimal + "[run]\nmethod = adem\nsteps = 10\n");
    CHECK(cfg.method == Method::adem);
    CHECK(cfg.n_steps == 10);
    CHECK(std::string(to_string(Method::adem)) == "adem");
    CHECK(std::string(to_string(Method::tgm)) == "tgm");
}

TEST_CASE("cfl above one is rejected") {
    std::string text = kMinimal;
    text.replace(text.find("nodes = 3000"), 12, "nodes = 3000\ncfl = 1.1");
    CHECK_THROWS_WITH_AS(parse_config(text), doctest::Contains("CFL"), ConfigError);
}

TEST_CASE("parse errors carry the line number") {
    CHECK(error_line(kMinimal + "[run]\nbogus = 1\n") == 11);
    CHECK(error_line("[grid]\nlength = abc\n") == 2);
    CHECK(error_line("[grid]\nlength = 1\nlength = 2\n") == 3);
    CHECK(error_line("length = 1\n") == 1);
    CHECK(error_line("[nowhere]\n") == 1);
}

TEST_CASE("semantic errors") {
    CHECK_THROWS_WITH_AS(parse_config("[grid]\nlength = 0.05\n"), doctest::Contains("missing required key"), ConfigError);
    CHECK_THROWS_AS(parse_config(kMinimal + "[medium.pole.2]\ndelta_eps = 1\nomega_p = 1e9\ndelta_p = 1e8\n"), ConfigError);
    CHECK_THROWS_AS(parse_config(kMinimal + "[medium.pole.1]\ndelta_eps = 1\nomega_p = 1e9\n"), ConfigError);
    CHECK_THROWS_AS(parse_config(kMinimal + "[medium.pole.1]\ndelta_eps = 1\nomega_p = 1e9\ndelta_p = 1e9\n"), ConfigError);
    CHECK_THROWS_AS(parse_config(kMinimal + "[run]\nprobes = 0.5, 1.0\n"), ConfigError);
}

TEST_CASE("missing file") {
    CHECK_THROWS_AS(load_config(GFDTD_CONFIG_DIR "/does_not_exist.cfg"), ConfigError);
}
