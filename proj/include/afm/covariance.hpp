// covariance.hpp - late-time second moments of the atom's internal degree of
// freedom from frequency integrals over the dressed propagator.
#pragma once

#include <limits>

#include <Eigen/Dense>

#include "afm/atom.hpp"

namespace afm {

/// Controls for the omega integral. beta is the inverse temperature;
/// infinity selects the exact vacuum weight (coth -> 1 on omega > 0).
struct QuadratureSpec {
    double cutoff = 100.0;  // hard UV cutoff Lambda, units of omega_a
    double rel_tol = 1e-8;
    int max_panels = 400000;
    double beta = std::numeric_limits<double>::infinity();

    QuadratureSpec() = default;
    QuadratureSpec(double lambda, double rtol, double beta_)
        : cutoff(lambda), rel_tol(rtol), beta(beta_) {
        if (rel_tol <= 0.0)
            throw DomainError("QuadratureSpec: rel_tol must be > 0");
        if (beta <= 0.0) throw DomainError("QuadratureSpec: beta must be > 0");
    }
    bool vacuum() const { return std::isinf(beta); }
};

/// Single-atom late-time covariances. vxp vanishes identically at late time
/// (the integrand is odd in omega), so it is fixed to zero by construction.
struct CovariancePoint {
    double vxx = 0.0;
    double vpp = 0.0;
    double vxp = 0.0;
    double cutoff = 0.0;          // Lambda actually used
    double err_estimate = 0.0;    // quadrature error estimate
    double vpp_cutoff_shift = 0.0;  // |V_PP(L) - V_PP(L/2)| / V_PP(L)
    bool cutoff_warning = false;    // shift above 5%
};

/// N-atom block covariances.
struct CovarianceMatrix {
    Eigen::MatrixXd vxx, vpp, vxp;
    double cutoff = 0.0;
    double err_estimate = 0.0;
};

/// Late-time V_XX, V_PP for one atom at height ell. An inert medium
/// (omega_p = 0, no conductor flag) gives the unbounded-space oscillator,
/// in which case ell is ignored.
CovariancePoint covariance(const AtomParams& params,
                           const LorentzMedium& medium, double ell,
                           const QuadratureSpec& quad,
                           const SommerfeldSpec& spec);

/// V_XP at late time; exact zero, kept as an operation for interface parity.
inline double v_xp() { return 0.0; }

/// N-atom late-time covariance blocks.
CovarianceMatrix covariance_blocks(const AtomArray& array,
                                   const LorentzMedium& medium,
                                   const QuadratureSpec& quad,
                                   const SommerfeldSpec& spec);

/// Lowest-order (one insertion of the medium correction) covariances;
/// differs from the exact pair by O(g'^4).
CovariancePoint covariance_perturbative(const AtomParams& params,
                                        const LorentzMedium& medium,
                                        double ell, const QuadratureSpec& quad,
                                        const SommerfeldSpec& spec);

} // namespace afm
