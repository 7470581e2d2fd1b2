#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "afm/config.hpp"

using namespace afm;

namespace {
std::string write_temp(const std::string& body) {
    std::string path = "test_config_tmp.cfg";
    std::ofstream out(path);
    out << body;
    return path;
}
} // namespace

TEST_CASE("file parsing") {
    const auto path = write_temp(
        "# comment line\n"
        "atom.gamma = 0.25   # trailing comment\n"
        "\n"
        "medium.conductor = true\n"
        "quad.beta = inf\n");
    Config cfg = Config::from_file(path);
    std::remove(path.c_str());

    CHECK(cfg.get_double("atom.gamma", 0.0) == doctest::Approx(0.25));
    CHECK(cfg.get_bool("medium.conductor", false));
    CHECK(std::isinf(cfg.get_double("quad.beta", 1.0)));
    CHECK_NOTHROW(cfg.validate_keys());
}

TEST_CASE("missing file and malformed lines") {
    CHECK_THROWS_AS(Config::from_file("no_such_file.cfg"), ConfigError);
    const auto path = write_temp("atom.gamma 0.25\n");
    CHECK_THROWS_AS(Config::from_file(path), ConfigError);
    std::remove(path.c_str());
}

TEST_CASE("overrides") {
    Config cfg;
    cfg.merge_overrides({"atom.gamma=0.1", "scan.points = 7"});
    CHECK(cfg.get_double("atom.gamma", 0.0) == doctest::Approx(0.1));
    CHECK(cfg.get_int("scan.points", 0) == 7);
    CHECK_THROWS_AS(cfg.merge_overrides({"atom.gamma"}), ConfigError);
}

TEST_CASE("unknown keys are named") {
    Config cfg;
    cfg.set("atom.gama", "0.1");
    try {
        cfg.validate_keys();
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("atom.gama") != std::string::npos);
    }
}

TEST_CASE("value parsing errors") {
    Config cfg;
    cfg.set("atom.gamma", "zero point one");
    CHECK_THROWS_AS(cfg.get_double("atom.gamma", 0.0), ConfigError);
    cfg.set("scan.points", "2.5");
    CHECK_THROWS_AS(cfg.get_int("scan.points", 0), ConfigError);
    cfg.set("medium.conductor", "maybe");
    CHECK_THROWS_AS(cfg.get_bool("medium.conductor", false), ConfigError);
}

TEST_CASE("hash is deterministic and value-sensitive") {
    Config a, b;
    a.set("atom.gamma", "0.05");
    b.set("atom.gamma", "0.05");
    CHECK(a.hash() == b.hash());
    b.set("atom.gamma", "0.25");
    CHECK(a.hash() != b.hash());
    b.set("atom.gamma", "0.05");
    b.set("scan.points", "7");
    CHECK(a.hash() != b.hash());
}

TEST_CASE("domain object factories apply defaults") {
    Config cfg;
    const AtomParams atom = cfg.atom();
    CHECK(atom.gamma_a == doctest::Approx(0.05));
    CHECK(atom.mass == 1.0);
    CHECK(atom.omega_a == 1.0);

    const LorentzMedium medium = cfg.medium();
    CHECK(medium.plasma_freq == doctest::Approx(1.0));
    CHECK(medium.resonance == doctest::Approx(1.0));
    CHECK(medium.damping == doctest::Approx(0.1));
    CHECK_FALSE(medium.conductor);

    CHECK(cfg.ell() == doctest::Approx(1.0));
    CHECK(cfg.quadrature().cutoff == doctest::Approx(100.0));
    CHECK(cfg.quadrature().vacuum());

    cfg.set("medium.conductor", "true");
    CHECK(cfg.medium().conductor);
}
