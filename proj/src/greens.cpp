// greens.cpp - Sommerfeld-integral evaluation of the half-space Green's functions
#include "afm/greens.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "afm/quadrature.hpp"

namespace afm {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// Root with non-negative imaginary part (outgoing/decaying waves).
cd sqrt_upper(cd w) {
    cd s = std::sqrt(w);
    if (s.imag() < 0.0) s = -s;
    return s;
}

double bessel_j0(double x) { return std::cyl_bessel_j(0.0, x); }

// Propagating sector, k_rho = omega sin(theta): the Jacobian cancels the
// 1/k_z endpoint singularity and the integrand becomes
//   (i/4pi) omega sin(theta) R J0(omega rho sin theta) e^{i omega d cos theta}
// with R == 1 for the free-space identity.
template <typename Refl>
cd propagating_part(double omega, double rho, double d, Refl refl,
                    const SommerfeldSpec& spec,
                    std::vector<double> extra_theta) {
    if (omega <= 0.0) return cd(0.0, 0.0);
    auto f = [&](double theta) -> cd {
        const double s = std::sin(theta), c = std::cos(theta);
        return cd(0.0, omega / kFourPi) * s * refl(omega * s, omega * c) *
               bessel_j0(omega * rho * s) *
               std::exp(cd(0.0, omega * d * c));
    };
    std::vector<double> bp;
    // phase omega*d*cos(theta) and J0 argument omega*rho*sin(theta): keep
    // each below ~pi per panel
    const double half_pi = 0.5 * std::numbers::pi;
    double width = half_pi;
    const double scale = omega * (d + rho);
    if (scale > std::numbers::pi)
        width = half_pi / std::ceil(scale / std::numbers::pi);
    append_uniform(bp, 0.0, half_pi, width);
    for (double t : extra_theta)
        if (t > 0.0 && t < half_pi) bp.push_back(t);
    std::sort(bp.begin(), bp.end());
    return integrate<cd>(f, bp, spec.rel_tol, spec.abs_tol, spec.max_panels)
        .value;
}

// Evanescent sector, k_z = i kappa: the e^{i k_z d} factor is a real
// decaying exponential e^{-kappa d} and the k dk = kappa dkappa Jacobian
// removes the 1/kappa endpoint factor.
template <typename Refl>
cd evanescent_part(double omega, double rho, double d, Refl refl,
                   const SommerfeldSpec& spec,
                   std::vector<double> extra_kappa) {
    const double kappa_max =
        spec.evanescent_decade_cap * std::numbers::ln10 / d;
    auto f = [&](double kappa) -> cd {
        const double k = std::hypot(omega, kappa);
        return (1.0 / kFourPi) * refl(k, cd(0.0, kappa)) * bessel_j0(rho * k) *
               std::exp(-kappa * d);
    };
    std::vector<double> bp;
    // one panel per e-folding decade, refined if J0 oscillates
    double width = std::numbers::ln10 / d;
    if (rho > 0.0) width = std::min(width, std::numbers::pi / rho);
    append_uniform(bp, 0.0, kappa_max, width);
    for (double k : extra_kappa)
        if (k > 0.0 && k < kappa_max) bp.push_back(k);
    std::sort(bp.begin(), bp.end());
    return integrate<cd>(f, bp, spec.rel_tol, spec.abs_tol, spec.max_panels)
        .value;
}

} // namespace

cd g_free(double omega, double r) {
    if (r <= 0.0)
        throw DomainError("g_free: coincident points; use the renormalized route");
    return std::exp(cd(0.0, omega * r)) / (kFourPi * r);
}

cd g_free_sommerfeld(double omega, const Geometry& geom,
                     const SommerfeldSpec& spec) {
    if (omega < 0.0)
        return std::conj(g_free_sommerfeld(-omega, geom, spec));
    const double d = std::abs(geom.z - geom.z_prime);
    if (d <= 0.0)
        throw DomainError(
            "g_free_sommerfeld: needs |z - z'| > 0 to truncate the tail");
    auto unity = [](double, cd) -> cd { return cd(1.0, 0.0); };
    auto unity_p = [](double, double) -> cd { return cd(1.0, 0.0); };
    return propagating_part(omega, geom.rho, d, unity_p, spec, {}) +
           evanescent_part(omega, geom.rho, d, unity, spec, {});
}

cd g_medium(double omega, const Geometry& geom, const LorentzMedium& medium,
            const SommerfeldSpec& spec) {
    if (medium.conductor) {
        // |epsilon| -> infinity: R -> -1 uniformly and the integral
        // collapses to an image source at distance sqrt(rho^2 + (z+z')^2).
        const double r = geom.image_distance();
        return -g_free(omega, r);
    }
    if (medium.inert()) return cd(0.0, 0.0);
    if (omega < 0.0) return std::conj(g_medium(-omega, geom, medium, spec));
    if (omega == 0.0) return cd(0.0, 0.0);  // K_z == k_z, R vanishes

    const cd eps = epsilon(medium, omega);
    const double d = geom.z + geom.z_prime;

    auto refl_prop = [&](double k_rho, double k_z) -> cd {
        const cd Kz = sqrt_upper(omega * omega * eps - k_rho * k_rho);
        return (k_z - Kz) / (k_z + Kz);
    };
    auto refl_evan = [&](double k_rho, cd k_z) -> cd {
        const cd Kz = sqrt_upper(omega * omega * eps - k_rho * k_rho);
        return (k_z - Kz) / (k_z + Kz);
    };

    // For weakly damped media K_z changes character where
    // k_rho^2 = omega^2 Re(eps); seed a breakpoint there.
    std::vector<double> theta_kinks, kappa_kinks;
    const double re = eps.real();
    if (re > 0.0 && re < 1.0) theta_kinks.push_back(std::asin(std::sqrt(re)));
    if (re > 1.0) kappa_kinks.push_back(omega * std::sqrt(re - 1.0));

    return propagating_part(omega, geom.rho, d, refl_prop, spec, theta_kinks) +
           evanescent_part(omega, geom.rho, d, refl_evan, spec, kappa_kinks);
}

cd g_conductor(double omega, double ell) {
    if (ell <= 0.0) throw DomainError("g_conductor: ell <= 0");
    return -std::exp(cd(0.0, 2.0 * omega * ell)) /
           (8.0 * std::numbers::pi * ell);
}

} // namespace afm
