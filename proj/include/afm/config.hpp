// config.hpp - flat key=value configuration with strict key checking
#pragma once

#include <map>
#include <string>
#include <vector>

#include "afm/scan.hpp"

namespace afm {

/// Flat string map merged from a config file and command-line overrides.
/// Unknown keys are a hard error. Values are decimal with "inf" accepted
/// where a frequency cutoff or temperature allows it.
class Config {
public:
    Config() = default;

    /// Parses `key = value` lines; '#' starts a comment; blank lines allowed.
    static Config from_file(const std::string& path);

    void set(const std::string& key, const std::string& value);
    void merge_overrides(const std::vector<std::string>& key_equals_value);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    /// Throws ConfigError naming the first key outside the known set.
    void validate_keys() const;

    /// FNV-1a over the canonically ordered key=value lines; provenance tag
    /// for emitted CSV.
    std::string hash() const;

    // Assembled domain objects with defaults per the documented key set.
    LorentzMedium medium() const;
    AtomParams atom() const;
    double ell() const;
    QuadratureSpec quadrature() const;
    SommerfeldSpec sommerfeld() const;

private:
    std::map<std::string, std::string> values_;
};

} // namespace afm
