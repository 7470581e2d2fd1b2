// medium.hpp - Lorentz-oscillator model of a dispersive, absorptive dielectric
#pragma once

#include <cmath>
#include <complex>

#include "afm/errors.hpp"

namespace afm {

using cd = std::complex<double>;

/// Single-species Lorentz dielectric. All frequencies are dimensionless
/// (units of the atom frequency). The susceptibility denominator uses the
/// shifted resonance w = sqrt(varpi^2 - gamma^2) rather than the bare
/// oscillator frequency; for gamma << w the two conventions agree to
/// O(gamma^2).
struct LorentzMedium {
    double plasma_freq = 1.0;   // omega_p
    double resonance = 1.0;     // w (shifted resonance)
    double damping = 0.1;       // gamma
    bool conductor = false;     // perfect-conductor idealization; other fields ignored

    LorentzMedium() = default;
    LorentzMedium(double omega_p, double w, double gamma, bool cond = false)
        : plasma_freq(omega_p), resonance(w), damping(gamma), conductor(cond) {
        if (plasma_freq < 0.0) throw DomainError("LorentzMedium: plasma_freq < 0");
        if (resonance <= 0.0) throw DomainError("LorentzMedium: resonance <= 0");
        if (damping < 0.0) throw DomainError("LorentzMedium: damping < 0");
    }

    static LorentzMedium perfect_conductor() {
        LorentzMedium m;
        m.conductor = true;
        return m;
    }
    static LorentzMedium vacuum() { return LorentzMedium(0.0, 1.0, 0.0); }

    bool inert() const { return !conductor && plasma_freq == 0.0; }
};

/// omega_p from the microscopic coupling, oscillator mass and lattice spacing.
inline double plasma_frequency(double g_m, double m, double a) {
    if (m <= 0.0) throw DomainError("plasma_frequency: m <= 0");
    if (a <= 0.0) throw DomainError("plasma_frequency: a <= 0");
    return std::sqrt(g_m * g_m / (m * a * a * a));
}

/// Mass-normalized response of a single dielectric charge,
/// 1 / [w^2 - (omega + i gamma)^2]. The oscillator mass is absorbed into
/// omega_p so that epsilon = 1 + omega_p^2 * propagator identically.
inline cd dielectric_atom_propagator(const LorentzMedium& med, double omega) {
    if (med.conductor)
        throw DomainError("dielectric_atom_propagator: conductor medium");
    const cd shifted(omega, med.damping);
    const cd den = med.resonance * med.resonance - shifted * shifted;
    if (den == cd(0.0, 0.0))
        throw PoleError("dielectric_atom_propagator: undamped resonance hit");
    return 1.0 / den;
}

/// Lorentz permittivity for real frequency. Satisfies
/// epsilon(-omega) = conj(epsilon(omega)) and Im epsilon > 0 for omega > 0
/// when damping > 0.
inline cd epsilon(const LorentzMedium& med, double omega) {
    if (med.plasma_freq == 0.0) return cd(1.0, 0.0);
    return 1.0 + med.plasma_freq * med.plasma_freq *
                     dielectric_atom_propagator(med, omega);
}

} // namespace afm
