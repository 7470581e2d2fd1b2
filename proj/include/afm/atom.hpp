// atom.hpp - physical oscillator parameters after order reduction and the
// dressed retarded propagator of the atom's internal degree of freedom.
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "afm/greens.hpp"
#include "afm/medium.hpp"

namespace afm {

double order_reduce_coupling(double g_f, double Omega);
double gamma_from_coupling(double g_f_eff, double mass);
double coupling_from_gamma(double gamma, double mass);

/// Order-reduction bookkeeping check: Omega_A^2 tau_A == Omega^2 tau.
bool tau_consistency(double omega_a, double tau_a, double omega, double tau);

/// Physical oscillator parameters (mass M_A, frequency Omega_A, damping
/// gamma'_A and the derived coupling g'_F = sqrt(8 pi M_A gamma'_A)).
struct AtomParams {
    double mass = 1.0;
    double omega_a = 1.0;
    double gamma_a = 0.0;
    double coupling = 0.0;

    AtomParams() = default;
    AtomParams(double gamma, double mass_ = 1.0, double omega = 1.0);

    static AtomParams from_coupling(double g_f_eff, double mass = 1.0,
                                    double omega = 1.0);
    bool underdamped() const { return gamma_a < omega_a; }
};

/// N identical atoms at fixed positions above the interface.
struct AtomArray {
    AtomParams params;
    std::vector<Eigen::Vector3d> positions;

    AtomArray(AtomParams p, std::vector<Eigen::Vector3d> pos);
    int size() const { return static_cast<int>(positions.size()); }
};

/// Damped-oscillator retarded propagator, [M(Omega^2 - w^2) - i 2 M gamma w]^-1.
cd g_atom_free(double omega, const AtomParams& params);

/// Dressed single-atom propagator at height ell above the half-space:
/// [M(Omega^2 - w^2) - i 2 M gamma w - g'^2 G_M(w, ell)]^-1.
cd g_atom(double omega, const AtomParams& params, const LorentzMedium& medium,
          double ell, const SommerfeldSpec& spec);

/// N x N dressed propagator matrix,
/// [M(Omega^2 - w^2) I - g'^2 G^(phi)(w)]^-1, where the field matrix G^(phi)
/// carries g_free + g_medium off the diagonal and the renormalized local
/// part i w/(4 pi) plus the coincident medium correction on it.
Eigen::MatrixXcd g_atom_matrix(double omega, const AtomArray& array,
                               const LorentzMedium& medium,
                               const SommerfeldSpec& spec);

/// Relative residual of the resolvent identity
/// G = G_0 + g'^2 G G_M G_0; an exact algebraic zero up to rounding.
double schwinger_dyson_residual(double omega, const AtomParams& params,
                                const LorentzMedium& medium, double ell,
                                const SommerfeldSpec& spec);

} // namespace afm
