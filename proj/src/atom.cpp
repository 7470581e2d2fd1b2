// atom.cpp - dressed atomic propagators, scalar and N-atom matrix forms
#include "afm/atom.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

namespace afm {

namespace {
constexpr double kNearPole = 1e-14;
constexpr double kEightPi = 8.0 * std::numbers::pi;
} // namespace

double order_reduce_coupling(double g_f, double Omega) {
    if (Omega <= 0.0) throw DomainError("order_reduce_coupling: Omega <= 0");
    return g_f * Omega;
}

double gamma_from_coupling(double g_f_eff, double mass) {
    if (mass <= 0.0) throw DomainError("gamma_from_coupling: mass <= 0");
    return g_f_eff * g_f_eff / (kEightPi * mass);
}

double coupling_from_gamma(double gamma, double mass) {
    if (mass <= 0.0 || gamma < 0.0)
        throw DomainError("coupling_from_gamma: bad arguments");
    return std::sqrt(kEightPi * mass * gamma);
}

bool tau_consistency(double omega_a, double tau_a, double omega, double tau) {
    const double lhs = omega_a * omega_a * tau_a;
    const double rhs = omega * omega * tau;
    return std::abs(lhs - rhs) <= 1e-12 * rhs;
}

AtomParams::AtomParams(double gamma, double mass_, double omega)
    : mass(mass_), omega_a(omega), gamma_a(gamma) {
    if (mass <= 0.0) throw DomainError("AtomParams: mass <= 0");
    if (omega_a <= 0.0) throw DomainError("AtomParams: omega_a <= 0");
    if (gamma_a < 0.0) throw DomainError("AtomParams: gamma_a < 0");
    coupling = coupling_from_gamma(gamma_a, mass);
    if (!underdamped())
        std::cerr << "warning: gamma_a >= omega_a, outside the underdamped "
                     "regime\n";
}

AtomParams AtomParams::from_coupling(double g_f_eff, double mass,
                                     double omega) {
    return AtomParams(gamma_from_coupling(g_f_eff, mass), mass, omega);
}

AtomArray::AtomArray(AtomParams p, std::vector<Eigen::Vector3d> pos)
    : params(p), positions(std::move(pos)) {
    if (positions.empty()) throw DomainError("AtomArray: N >= 1 required");
    for (const auto& x : positions)
        if (x.z() <= 0.0) throw DomainError("AtomArray: positions need z > 0");
    for (size_t i = 0; i < positions.size(); ++i)
        for (size_t j = i + 1; j < positions.size(); ++j)
            if ((positions[i] - positions[j]).norm() == 0.0)
                throw DomainError("AtomArray: coincident atom positions");
}

cd g_atom_free(double omega, const AtomParams& p) {
    const cd den = p.mass * (p.omega_a * p.omega_a - omega * omega) -
                   cd(0.0, 2.0 * p.mass * p.gamma_a * omega);
    if (std::abs(den) < kNearPole)
        throw PoleError("g_atom_free: undamped resonance");
    return 1.0 / den;
}

cd g_atom(double omega, const AtomParams& p, const LorentzMedium& medium,
          double ell, const SommerfeldSpec& spec) {
    if (ell <= 0.0) throw DomainError("g_atom: ell <= 0");
    const cd gm = g_medium(omega, Geometry::coincident(ell), medium, spec);
    const cd den = p.mass * (p.omega_a * p.omega_a - omega * omega) -
                   cd(0.0, 2.0 * p.mass * p.gamma_a * omega) -
                   p.coupling * p.coupling * gm;
    if (std::abs(den) < kNearPole)
        throw InstabilityError("g_atom: denominator below threshold");
    return 1.0 / den;
}

Eigen::MatrixXcd g_atom_matrix(double omega, const AtomArray& array,
                               const LorentzMedium& medium,
                               const SommerfeldSpec& spec) {
    const int n = array.size();
    const AtomParams& p = array.params;
    const double g2 = p.coupling * p.coupling;

    Eigen::MatrixXcd field(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& xi = array.positions[i];
        for (int j = i; j < n; ++j) {
            const auto& xj = array.positions[j];
            const double rho = std::hypot(xi.x() - xj.x(), xi.y() - xj.y());
            const Geometry geom(xi.z(), xj.z(), rho);
            cd entry = g_medium(omega, geom, medium, spec);
            if (i == j) {
                // renormalized free coincident part i w / 4 pi; through the
                // bracket's -g'^2 it carries the damping -i 2 M gamma_a w
                entry += cd(0.0, omega / (4.0 * std::numbers::pi));
            } else {
                entry += g_free(omega, (xi - xj).norm());
            }
            field(i, j) = entry;
            field(j, i) = entry;
        }
    }

    Eigen::MatrixXcd bracket =
        p.mass * (p.omega_a * p.omega_a - omega * omega) *
            Eigen::MatrixXcd::Identity(n, n) -
        g2 * field;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(bracket);
    if (!lu.isInvertible() ||
        std::abs(lu.determinant()) < std::pow(kNearPole, n))
        throw InstabilityError("g_atom_matrix: singular bracket at omega=" +
                               std::to_string(omega));
    return lu.inverse();
}

double schwinger_dyson_residual(double omega, const AtomParams& p,
                                const LorentzMedium& medium, double ell,
                                const SommerfeldSpec& spec) {
    const cd gm = g_medium(omega, Geometry::coincident(ell), medium, spec);
    const cd g0 = g_atom_free(omega, p);
    const cd g = g_atom(omega, p, medium, ell, spec);
    const cd residual = g - g0 - p.coupling * p.coupling * g * gm * g0;
    return std::abs(residual) / std::abs(g);
}

} // namespace afm
