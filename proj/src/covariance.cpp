// covariance.cpp - omega-quadrature of the dressed propagator
#include "afm/covariance.hpp"

#include <cmath>
#include <numbers>

#include "afm/quadrature.hpp"

namespace afm {

namespace {

// coth(beta*omega/2), with the vacuum limit handled exactly and a series
// for small argument so the omega -> 0 panel stays noise-free.
double thermal_weight(double omega, double beta) {
    if (std::isinf(beta)) return 1.0;
    const double x = 0.5 * beta * omega;
    if (x < 1e-3) return 1.0 / x + x / 3.0 - x * x * x / 45.0;
    return 1.0 / std::tanh(x);
}

// Integration grid on [0, Lambda]: a finely panelled Breit-Wigner zone
// around the resonance, oscillation-aware panels elsewhere (the medium part
// oscillates like e^{i 2 omega ell}), and an explicit Lambda/2 node for the
// cutoff-sensitivity diagnostic.
std::vector<double> omega_breakpoints(const AtomParams& p, double osc_len,
                                      double lambda) {
    const double gamma = p.gamma_a;
    double zone_a = p.omega_a - 10.0 * gamma;
    double zone_b = p.omega_a + 10.0 * gamma;
    zone_a = std::max(0.0, zone_a);
    zone_b = std::min(lambda, zone_b);

    double outer = 0.25 * p.omega_a;
    if (osc_len > 0.0)
        outer = std::min(outer, std::numbers::pi / (4.0 * osc_len));

    std::vector<double> bp;
    if (zone_a > 0.0) append_uniform(bp, 0.0, zone_a, outer);
    else bp.push_back(0.0);
    if (zone_b > zone_a && gamma > 0.0)
        append_uniform(bp, zone_a, zone_b, std::max(gamma / 4.0, 1e-300));
    if (lambda > zone_b) append_uniform(bp, zone_b, lambda, outer);
    bp.push_back(0.5 * lambda);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    return bp;
}

// Characteristic oscillation length of the dressed propagator's medium part.
double oscillation_length(const LorentzMedium& medium, double ell) {
    if (medium.inert()) return 0.0;
    return 2.0 * ell;  // e^{i k_z (z+z')} at coincidence
}

void validate(const AtomParams& p, const QuadratureSpec& quad) {
    if (quad.cutoff <= 10.0 * p.omega_a)
        throw DomainError("QuadratureSpec: cutoff must exceed 10 * omega_a");
}

struct SplitIntegral {
    Eigen::Vector2d below;  // [0, Lambda/2]
    Eigen::Vector2d total;  // [0, Lambda]
    double err;
};

template <typename Propagator>
SplitIntegral integrate_moments(Propagator&& dressed, const AtomParams& p,
                                double osc_len, const QuadratureSpec& quad) {
    const double lambda = quad.cutoff;
    auto f = [&](double omega) -> Eigen::Vector2d {
        const cd g = dressed(omega);
        const double w = thermal_weight(omega, quad.beta) / std::numbers::pi;
        const double im = g.imag();
        return {w * im,
                w * im * p.mass * p.mass * omega * omega};
    };
    auto bp = omega_breakpoints(p, osc_len, lambda);
    const double half = 0.5 * lambda;
    auto mid = std::find(bp.begin(), bp.end(), half);
    std::span<const double> lower(bp.data(), (mid - bp.begin()) + 1);
    std::span<const double> upper(bp.data() + (mid - bp.begin()),
                                  bp.end() - mid);
    auto lo = integrate<Eigen::Vector2d>(f, lower, quad.rel_tol, 0.0,
                                         quad.max_panels);
    auto hi = integrate<Eigen::Vector2d>(f, upper, quad.rel_tol, 0.0,
                                         quad.max_panels);
    return {lo.value, lo.value + hi.value, lo.error + hi.error};
}

CovariancePoint assemble(const SplitIntegral& s, double lambda) {
    CovariancePoint out;
    out.vxx = s.total[0];
    out.vpp = s.total[1];
    out.cutoff = lambda;
    out.err_estimate = s.err;
    if (out.vpp != 0.0)
        out.vpp_cutoff_shift = std::abs(out.vpp - s.below[1]) / std::abs(out.vpp);
    out.cutoff_warning = out.vpp_cutoff_shift > 0.05;
    return out;
}

} // namespace

CovariancePoint covariance(const AtomParams& params,
                           const LorentzMedium& medium, double ell,
                           const QuadratureSpec& quad,
                           const SommerfeldSpec& spec) {
    validate(params, quad);
    auto dressed = [&](double omega) -> cd {
        if (medium.inert()) return g_atom_free(omega, params);
        return g_atom(omega, params, medium, ell, spec);
    };
    const double osc = oscillation_length(medium, medium.inert() ? 0.0 : ell);
    return assemble(integrate_moments(dressed, params, osc, quad),
                    quad.cutoff);
}

CovariancePoint covariance_perturbative(const AtomParams& params,
                                        const LorentzMedium& medium,
                                        double ell, const QuadratureSpec& quad,
                                        const SommerfeldSpec& spec) {
    validate(params, quad);
    const double g2 = params.coupling * params.coupling;
    auto dressed = [&](double omega) -> cd {
        const cd g0 = g_atom_free(omega, params);
        if (medium.inert()) return g0;
        const cd gm =
            g_medium(omega, Geometry::coincident(ell), medium, spec);
        return g0 + g2 * g0 * gm * g0;
    };
    const double osc = oscillation_length(medium, medium.inert() ? 0.0 : ell);
    return assemble(integrate_moments(dressed, params, osc, quad),
                    quad.cutoff);
}

CovarianceMatrix covariance_blocks(const AtomArray& array,
                                   const LorentzMedium& medium,
                                   const QuadratureSpec& quad,
                                   const SommerfeldSpec& spec) {
    const AtomParams& p = array.params;
    validate(p, quad);
    const int n = array.size();

    // longest oscillation scale among image paths and pair separations
    double osc = 0.0;
    if (!medium.inert()) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                osc = std::max(osc, array.positions[i].z() +
                                        array.positions[j].z());
                if (i != j)
                    osc = std::max(
                        osc, (array.positions[i] - array.positions[j]).norm());
            }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                osc = std::max(
                    osc, (array.positions[i] - array.positions[j]).norm());
    }

    auto f = [&](double omega) -> Eigen::MatrixXd {
        const Eigen::MatrixXcd g = g_atom_matrix(omega, array, medium, spec);
        const double w = thermal_weight(omega, quad.beta) / std::numbers::pi;
        Eigen::MatrixXd stacked(2 * n, n);
        stacked.topRows(n) = w * g.imag();
        stacked.bottomRows(n) =
            (w * p.mass * p.mass * omega * omega) * g.imag();
        return stacked;
    };
    auto bp = omega_breakpoints(p, osc, quad.cutoff);
    auto res = integrate<Eigen::MatrixXd>(f, bp, quad.rel_tol, 0.0,
                                          quad.max_panels);
    CovarianceMatrix out;
    out.vxx = res.value.topRows(n);
    out.vpp = res.value.bottomRows(n);
    out.vxp = Eigen::MatrixXd::Zero(n, n);
    out.cutoff = quad.cutoff;
    out.err_estimate = res.error;
    return out;
}

} // namespace afm
