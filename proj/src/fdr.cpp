// fdr.cpp
#include "afm/fdr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace afm {

namespace {

double coth_weight(double omega, double beta) {
    if (std::isinf(beta)) return 1.0;
    return 1.0 / std::tanh(0.5 * beta * omega);
}

// Free-field coincident spectral density via the mode sum: omega / 4 pi.
double spectral_density_mode_sum(double omega) {
    return omega / (4.0 * std::numbers::pi);
}

// Independent route: Im of the closed-form propagator at vanishing
// separation. r is small enough that the O((wr)^2) bias sits below the
// residual thresholds across the test grid.
double spectral_density_limit(double omega) {
    constexpr double r = 1e-7;
    return g_free(omega, r).imag();
}

} // namespace

double field_fdr_residual(double omega, double beta) {
    if (omega <= 0.0) throw DomainError("field_fdr_residual: omega <= 0");
    const double w = coth_weight(omega, beta);
    const double hadamard = w * spectral_density_mode_sum(omega);
    const double from_propagator = w * spectral_density_limit(omega);
    return std::abs(hadamard - from_propagator);
}

double atom_im_identity_residual(double omega, const AtomParams& p) {
    const cd g = g_atom_free(omega, p);
    const double lhs = g.imag();
    const double rhs = std::norm(g) * 2.0 * p.mass * p.gamma_a * omega;
    return std::abs(lhs - rhs) / std::abs(lhs);
}

double atom_fdr_residual(double omega, double beta, const AtomParams& p,
                         bool inconsistent) {
    if (omega <= 0.0) throw DomainError("atom_fdr_residual: omega <= 0");
    const cd g = g_atom_free(omega, p);
    double noise_coupling = p.coupling * p.coupling;
    if (inconsistent) {
        // dissipation-only reduction: noise keeps the derivative weight
        noise_coupling *= (omega * omega) / (p.omega_a * p.omega_a);
    }
    const double field_hadamard =
        coth_weight(omega, beta) * spectral_density_limit(omega);
    const double lhs = noise_coupling * std::norm(g) * field_hadamard;
    const double rhs = coth_weight(omega, beta) * g.imag();
    return std::abs(lhs - rhs) / std::abs(rhs);
}

FdrReport run_fdr_check(std::span<const double> omega_grid, double beta,
                        const AtomParams& params, bool inconsistent) {
    FdrReport rep;
    rep.omega_grid.assign(omega_grid.begin(), omega_grid.end());
    for (double w : omega_grid) {
        rep.residual_field.push_back(field_fdr_residual(w, beta));
        rep.residual_atom.push_back(atom_im_identity_residual(w, params));
        rep.residual_fdr.push_back(
            atom_fdr_residual(w, beta, params, inconsistent));
    }
    double worst = 0.0;
    bool ok = true;
    for (size_t i = 0; i < rep.omega_grid.size(); ++i) {
        worst = std::max({worst, rep.residual_field[i], rep.residual_atom[i],
                          rep.residual_fdr[i]});
        ok = ok && rep.residual_field[i] <= 1e-12 &&
             rep.residual_atom[i] <= 1e-12 && rep.residual_fdr[i] <= 1e-10;
    }
    rep.max_residual = worst;
    rep.pass = ok;
    return rep;
}

} // namespace afm
