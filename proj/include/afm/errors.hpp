// errors.hpp - exception types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace afm {

// Invalid argument outside an operation's domain (non-positive mass, length, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Undamped resonance hit exactly: the response function has a pole there.
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dressed propagator denominator fell below threshold; the parameter set is
// dynamically unstable (or numerically indistinguishable from a pole).
struct InstabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature exhausted its panel budget. Carries the achieved
// error estimate so callers can decide whether the result is still usable.
struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_error(achieved) {}
    double achieved_error;
};

// vxx*vpp fell below the uncertainty bound by more than quadrature noise.
struct UncertaintyViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Not enough samples for the requested analysis.
struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration (unknown key, unparsable value). CLI maps this to exit 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace afm
