// greens.hpp - retarded Green's functions of the scalar field outside a
// dielectric half-space: free-space closed form, Sommerfeld plane-wave
// representation, half-space medium correction, perfect-conductor limit.
#pragma once

#include <complex>

#include "afm/medium.hpp"

namespace afm {

/// Two field points above the interface (z, z' > 0) with transverse
/// separation rho. Coincidence (rho = 0, z = z') is valid for the medium
/// correction only; the free part diverges there.
struct Geometry {
    double z;
    double z_prime;
    double rho = 0.0;

    Geometry(double z_, double z_prime_, double rho_ = 0.0)
        : z(z_), z_prime(z_prime_), rho(rho_) {
        if (z <= 0.0 || z_prime <= 0.0)
            throw DomainError("Geometry: both points must have z > 0");
        if (rho < 0.0) throw DomainError("Geometry: rho < 0");
    }

    static Geometry coincident(double ell) { return Geometry(ell, ell, 0.0); }

    double image_distance() const {
        return std::hypot(rho, z + z_prime);
    }
    bool coincident_point() const { return rho == 0.0 && z == z_prime; }
};

/// Controls for the k_rho (Sommerfeld) integrals.
struct SommerfeldSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int evanescent_decade_cap = 16;  // e-folding decades kept in the k_rho tail
    int max_panels = 20000;

    SommerfeldSpec() = default;
    SommerfeldSpec(double rtol, double atol, int decades)
        : rel_tol(rtol), abs_tol(atol), evanescent_decade_cap(decades) {
        if (rel_tol <= 0.0 || abs_tol <= 0.0)
            throw DomainError("SommerfeldSpec: tolerances must be > 0");
    }
};

/// e^{i omega r} / (4 pi r).
cd g_free(double omega, double r);

/// Plane-wave representation of g_free; validation oracle for the
/// quadrature machinery. Requires |z - z'| > 0.
cd g_free_sommerfeld(double omega, const Geometry& geom,
                     const SommerfeldSpec& spec);

/// Half-space medium correction: reflected-wave integral with
/// R = (k_z - K_z)/(k_z + K_z), finite at coincidence. Delegates to the
/// image closed form when medium.conductor is set; identically zero when
/// the medium is inert (omega_p = 0).
cd g_medium(double omega, const Geometry& geom, const LorentzMedium& medium,
            const SommerfeldSpec& spec);

/// Perfect-conductor coincident limit, -e^{i 2 omega ell} / (8 pi ell).
cd g_conductor(double omega, double ell);

} // namespace afm
