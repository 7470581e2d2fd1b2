// measures.hpp - Gaussian-state scalar measures from covariance data
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "afm/covariance.hpp"

namespace afm {

/// Scalar measures of the single-mode Gaussian state. purity = 1/(2 nu) and
/// rs = nu^2 hold exactly by construction.
struct MeasureSet {
    double purity = 1.0;
    double nu = 0.5;      // symplectic eigenvalue, sqrt(det V)
    double rs = 0.25;     // Robertson-Schroedinger function, nu^2
    double svn = 0.0;     // von Neumann entropy
    double energy = 0.0;  // mean oscillator energy
};

/// 1/(2 sqrt(vxx vpp)). Values marginally above 1 (quadrature noise in the
/// decoupled limit) are clamped to 1; a genuine uncertainty violation
/// (det V < 1/4 beyond tolerance) throws.
double purity(double vxx, double vpp);

/// (nu + 1/2) ln(nu + 1/2) - (nu - 1/2) ln(nu - 1/2); continuous at nu = 1/2.
double von_neumann(double nu);

/// vpp/(2M) + (M Omega^2 / 2) vxx.
double mechanical_energy(double vxx, double vpp, const AtomParams& params);

MeasureSet measures_from(double vxx, double vpp, const AtomParams& params);

enum class ExtremumKind { minimum, maximum };

struct Extremum {
    double x;
    ExtremumKind kind;
};

/// Interior local extrema of a sorted scan via sign changes of first
/// differences; endpoints are never reported. Needs at least 5 points.
std::vector<Extremum> detect_extremum(
    std::span<const std::pair<double, double>> scan);

} // namespace afm
