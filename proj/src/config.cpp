// config.cpp
#include "afm/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace afm {

namespace {

const std::set<std::string> kKnownKeys = {
    "medium.omega_p", "medium.w_sigma", "medium.gamma_sigma",
    "medium.conductor",
    "atom.mass", "atom.gamma", "atom.omega", "atom.positions",
    "geometry.ell",
    "quad.cutoff", "quad.rel_tol", "quad.abs_tol", "quad.beta",
    "quad.evanescent_decades",
    "scan.axis", "scan.min", "scan.max", "scan.points", "scan.spacing",
    "greens.omega_min", "greens.omega_max", "greens.points",
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    if (v == "inf" || v == "Inf" || v == "INF")
        return std::numeric_limits<double>::infinity();
    try {
        size_t idx = 0;
        double x = std::stod(v, &idx);
        if (idx != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: cannot parse value for key \"" + key +
                          "\": " + v);
    }
}

} // namespace

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open file " + path);
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: " + path + ":" +
                              std::to_string(lineno) + ": expected key = value");
        cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

void Config::set(const std::string& key, const std::string& value) {
    values_[key] = value;
}

void Config::merge_overrides(const std::vector<std::string>& overrides) {
    for (const auto& ov : overrides) {
        auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: --set expects key=value, got " + ov);
        const std::string key = trim(ov.substr(0, eq));
        if (key.empty()) throw ConfigError("config: empty key in --set " + ov);
        set(key, trim(ov.substr(eq + 1)));
    }
}

bool Config::has(const std::string& key) const {
    return values_.count(key) > 0;
}

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    return parse_double(key, it->second);
}

int Config::get_int(const std::string& key, int fallback) const {
    double x = get_double(key, fallback);
    int i = static_cast<int>(x);
    if (static_cast<double>(i) != x)
        throw ConfigError("config: key \"" + key + "\" expects an integer");
    return i;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::string v = it->second;
    std::transform(v.begin(), v.end(), v.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config: key \"" + key + "\" expects a boolean, got " +
                      it->second);
}

void Config::validate_keys() const {
    for (const auto& [key, _] : values_)
        if (!kKnownKeys.count(key))
            throw ConfigError("config: unknown key \"" + key + "\"");
}

std::string Config::hash() const {
    // FNV-1a 64-bit over the canonical "key=value\n" lines
    uint64_t h = 14695981039346656037ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [k, v] : values_) {
        mix(k);
        mix("=");
        mix(v);
        mix("\n");
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

LorentzMedium Config::medium() const {
    if (get_bool("medium.conductor", false))
        return LorentzMedium::perfect_conductor();
    return LorentzMedium(get_double("medium.omega_p", 1.0),
                         get_double("medium.w_sigma", 1.0),
                         get_double("medium.gamma_sigma", 0.1));
}

AtomParams Config::atom() const {
    return AtomParams(get_double("atom.gamma", 0.05),
                      get_double("atom.mass", 1.0),
                      get_double("atom.omega", 1.0));
}

double Config::ell() const { return get_double("geometry.ell", 1.0); }

QuadratureSpec Config::quadrature() const {
    return QuadratureSpec(get_double("quad.cutoff", 100.0),
                          get_double("quad.rel_tol", 1e-8),
                          get_double("quad.beta",
                                     std::numeric_limits<double>::infinity()));
}

SommerfeldSpec Config::sommerfeld() const {
    return SommerfeldSpec(get_double("quad.rel_tol", 1e-8) * 1e-2,
                          get_double("quad.abs_tol", 1e-14),
                          get_int("quad.evanescent_decades", 16));
}

} // namespace afm
