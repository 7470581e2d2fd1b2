// measures.cpp
#include "afm/measures.hpp"

#include <cmath>

namespace afm {

namespace {
constexpr double kDetTol = 1e-10;     // quadrature-noise allowance on det V
constexpr double kPurityTol = 1e-8;   // clamp window above 1
} // namespace

double purity(double vxx, double vpp) {
    if (vxx <= 0.0 || vpp <= 0.0)
        throw DomainError("purity: variances must be positive");
    const double det = vxx * vpp;
    if (det < 0.25 - kDetTol)
        throw UncertaintyViolation(
            "purity: det V < 1/4, inconsistent covariance inputs");
    double mu = 0.5 / std::sqrt(det);
    if (mu > 1.0 + kPurityTol)
        throw UncertaintyViolation("purity: value above 1 beyond tolerance");
    return std::min(mu, 1.0);
}

double von_neumann(double nu) {
    if (nu < 0.5) throw DomainError("von_neumann: nu < 1/2");
    const double a = nu + 0.5;
    const double b = nu - 0.5;
    const double lower = (b > 0.0) ? b * std::log(b) : 0.0;
    return a * std::log(a) - lower;
}

double mechanical_energy(double vxx, double vpp, const AtomParams& p) {
    if (vxx <= 0.0 || vpp <= 0.0)
        throw DomainError("mechanical_energy: variances must be positive");
    return 0.5 * vpp / p.mass + 0.5 * p.mass * p.omega_a * p.omega_a * vxx;
}

MeasureSet measures_from(double vxx, double vpp, const AtomParams& p) {
    MeasureSet m;
    m.purity = purity(vxx, vpp);
    m.nu = 0.5 / m.purity;
    m.rs = m.nu * m.nu;
    m.svn = von_neumann(m.nu);
    m.energy = mechanical_energy(vxx, vpp, p);
    return m;
}

std::vector<Extremum> detect_extremum(
    std::span<const std::pair<double, double>> scan) {
    if (scan.size() < 5)
        throw InsufficientData("detect_extremum: need at least 5 points");
    std::vector<Extremum> out;
    // raw first differences, no smoothing: scans are deterministic
    // quadrature outputs
    int prev_sign = 0;
    for (size_t i = 0; i + 1 < scan.size(); ++i) {
        const double d = scan[i + 1].second - scan[i].second;
        const int sign = (d > 0.0) - (d < 0.0);
        if (sign == 0) continue;
        if (prev_sign != 0 && sign != prev_sign) {
            out.push_back({scan[i].first, sign > 0 ? ExtremumKind::minimum
                                                   : ExtremumKind::maximum});
        }
        prev_sign = sign;
    }
    return out;
}

} // namespace afm
