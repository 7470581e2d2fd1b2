// quadrature.hpp - adaptive Gauss-Kronrod (7,15) integration for real,
// complex and small Eigen-valued integrands.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "afm/errors.hpp"

namespace afm {

inline double quad_norm(double x) { return std::abs(x); }
inline double quad_norm(const std::complex<double>& x) { return std::abs(x); }
template <typename Derived>
double quad_norm(const Eigen::MatrixBase<Derived>& x) {
    return x.cwiseAbs().maxCoeff();
}

template <typename T>
struct QuadResult {
    T value;
    double error = 0.0;   // absolute error estimate
    int panels = 0;
};

namespace detail {

// Kronrod-15 abscissae (non-negative half) and weights; Gauss-7 weights
// interleave at the odd indices.
inline constexpr double kGK15X[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kGK15WK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGK15WG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename T, typename F>
void gk15(F& f, double a, double b, T& result, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T fc = f(c);
    T gauss = kGK15WG[3] * fc;
    T kron = kGK15WK[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kGK15X[j];
        T f1 = f(c - x);
        T f2 = f(c + x);
        T s = f1 + f2;
        kron = kron + kGK15WK[j] * s;
        if (j % 2 == 1) gauss = gauss + kGK15WG[j / 2] * s;
    }
    result = h * kron;
    err = quad_norm(T(h * (kron - gauss)));
    // the standard (200 |K-G|)^{3/2} sharpening, capped by the raw difference
    if (err > 0.0) {
        double scaled = std::pow(200.0 * err, 1.5);
        if (scaled < err) err = scaled;
    }
}

template <typename T>
struct Segment {
    double a, b;
    T value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

} // namespace detail

// Integrates f over the union of [breakpoints[i], breakpoints[i+1]],
// refining the worst segment until sum(err) <= abs_tol + rel_tol*|I|
// or the panel budget is exhausted.
template <typename T, typename F>
QuadResult<T> integrate(F&& f, std::span<const double> breakpoints,
                        double rel_tol, double abs_tol, int max_panels) {
    if (breakpoints.size() < 2)
        throw DomainError("integrate: need at least two breakpoints");

    std::priority_queue<detail::Segment<T>> segs;
    T total{};
    bool first = true;
    double total_err = 0.0;
    int panels = 0;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        double a = breakpoints[i], b = breakpoints[i + 1];
        if (!(b > a)) continue;
        detail::Segment<T> s{a, b, T{}, 0.0};
        detail::gk15(f, a, b, s.value, s.error);
        if (first) { total = s.value; first = false; }
        else total = total + s.value;
        total_err += s.error;
        ++panels;
        segs.push(std::move(s));
    }
    if (first) throw DomainError("integrate: empty integration range");

    auto tol = [&] { return abs_tol + rel_tol * quad_norm(total); };
    while (total_err > tol() && panels < max_panels && !segs.empty()) {
        detail::Segment<T> worst = segs.top();
        segs.pop();
        const double m = 0.5 * (worst.a + worst.b);
        if (m <= worst.a || m >= worst.b) {
            // interval at machine resolution; keep its contribution as-is
            segs.push(worst);
            break;
        }
        detail::Segment<T> left{worst.a, m, T{}, 0.0};
        detail::Segment<T> right{m, worst.b, T{}, 0.0};
        detail::gk15(f, left.a, left.b, left.value, left.error);
        detail::gk15(f, right.a, right.b, right.value, right.error);
        total = total + (left.value + right.value - worst.value);
        total_err += left.error + right.error - worst.error;
        ++panels;
        segs.push(std::move(left));
        segs.push(std::move(right));
    }
    if (total_err > tol() && panels >= max_panels)
        throw QuadratureError("integrate: panel budget exhausted", total_err);
    return {total, total_err, panels};
}

template <typename T, typename F>
QuadResult<T> integrate(F&& f, double a, double b, double rel_tol,
                        double abs_tol, int max_panels) {
    const double bp[2] = {a, b};
    return integrate<T>(std::forward<F>(f), std::span<const double>(bp, 2),
                        rel_tol, abs_tol, max_panels);
}

// Breakpoint helper: [a,b] cut into panels of width <= max_width.
inline void append_uniform(std::vector<double>& bp, double a, double b,
                           double max_width) {
    int n = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
    for (int i = 0; i <= n; ++i)
        bp.push_back(a + (b - a) * static_cast<double>(i) / n);
}

} // namespace afm
