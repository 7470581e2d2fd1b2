#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "afm/covariance.hpp"

using namespace afm;
using std::numbers::pi;

namespace {

// Independent oracle for the conductor configuration: composite trapezoid
// over the same [0, Lambda] window with Richardson extrapolation. Shares no
// code with the adaptive quadrature under test.
double oracle_vxx_conductor(const AtomParams& p, double ell, double lambda) {
    auto integrand = [&](double w) {
        if (w == 0.0) return 0.0;
        const cd gc = -std::exp(cd(0.0, 2.0 * w * ell)) / (8.0 * pi * ell);
        const cd den = p.mass * (p.omega_a * p.omega_a - w * w) -
                       cd(0.0, 2.0 * p.mass * p.gamma_a * w) -
                       p.coupling * p.coupling * gc;
        return (1.0 / den).imag() / pi;
    };
    auto trapezoid = [&](long n) {
        const double h = lambda / n;
        double s = 0.5 * (integrand(0.0) + integrand(lambda));
        for (long i = 1; i < n; ++i) s += integrand(i * h);
        return s * h;
    };
    const double coarse = trapezoid(2'000'000);
    const double fine = trapezoid(4'000'000);
    return fine + (fine - coarse) / 3.0;
}

} // namespace

TEST_CASE("decoupled limit recovers the ground state") {
    AtomParams p(1e-6);
    QuadratureSpec quad;
    SommerfeldSpec spec;
    const CovariancePoint c =
        covariance(p, LorentzMedium::vacuum(), 1.0, quad, spec);
    CHECK(c.vxx == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(c.vpp == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(c.vxp == 0.0);
    CHECK(v_xp() == 0.0);
}

TEST_CASE("thermal oscillator limit") {
    AtomParams p(1e-6);
    SommerfeldSpec spec;
    QuadratureSpec quad(100.0, 1e-8, 1.0);
    const CovariancePoint c =
        covariance(p, LorentzMedium::vacuum(), 1.0, quad, spec);
    const double expect = 1.0 / std::tanh(0.5) / 2.0;
    CHECK(c.vxx == doctest::Approx(expect).epsilon(1e-3));
    CHECK(c.vpp == doctest::Approx(expect).epsilon(1e-3));
}

TEST_CASE("thermal monotonicity") {
    AtomParams p(0.05);
    SommerfeldSpec spec;
    double prev = 0.0;
    for (double beta :
         {std::numeric_limits<double>::infinity(), 10.0, 1.0}) {
        QuadratureSpec quad(100.0, 1e-8, beta);
        const CovariancePoint c = covariance(
            p, LorentzMedium::perfect_conductor(), 1.0, quad, spec);
        CHECK(c.vxx > prev);
        prev = c.vxx;
    }
}

TEST_CASE("conductor covariance against the trapezoid oracle") {
    AtomParams p(0.05);
    QuadratureSpec quad(100.0, 1e-10, std::numeric_limits<double>::infinity());
    SommerfeldSpec spec;
    const CovariancePoint c =
        covariance(p, LorentzMedium::perfect_conductor(), 1.0, quad, spec);
    const double oracle = oracle_vxx_conductor(p, 1.0, 100.0);
    CHECK(std::abs(c.vxx - oracle) / oracle < 1e-6);
}

TEST_CASE("perturbative branch converges at second order in gamma") {
    SommerfeldSpec spec;
    QuadratureSpec quad(100.0, 1e-10, std::numeric_limits<double>::infinity());
    auto diff = [&](double gamma) {
        AtomParams p(gamma);
        const auto exact = covariance(p, LorentzMedium::perfect_conductor(),
                                      1.0, quad, spec);
        const auto pert = covariance_perturbative(
            p, LorentzMedium::perfect_conductor(), 1.0, quad, spec);
        return std::abs(pert.vxx - exact.vxx);
    };
    const double order = std::log2(diff(0.02) / diff(0.01));
    CHECK(order > 1.7);
    CHECK(order < 2.3);
}

TEST_CASE("medium correction dies off far from the surface") {
    AtomParams p(0.05);
    QuadratureSpec quad;
    SommerfeldSpec spec;
    LorentzMedium m{1.0, 1.0, 0.1};
    const double with = covariance(p, m, 50.0, quad, spec).vxx;
    const double without =
        covariance(p, LorentzMedium::vacuum(), 50.0, quad, spec).vxx;
    CHECK(std::abs(with - without) / without < 2e-4);
}

TEST_CASE("conductor suppresses fluctuations near the surface") {
    AtomParams p(0.25);
    QuadratureSpec quad;
    SommerfeldSpec spec;
    const auto near = covariance(p, LorentzMedium::perfect_conductor(), 0.05,
                                 quad, spec);
    const auto far = covariance(p, LorentzMedium::perfect_conductor(), 1.0,
                                quad, spec);
    CHECK(near.vxx * near.vpp < far.vxx * far.vpp);
}

TEST_CASE("single-atom block equals the scalar path") {
    AtomParams p(0.05);
    QuadratureSpec quad;
    SommerfeldSpec spec;
    LorentzMedium m{1.0, 1.0, 0.1};
    AtomArray one(p, {{0.0, 0.0, 0.8}});
    const CovarianceMatrix blocks = covariance_blocks(one, m, quad, spec);
    const CovariancePoint scalar = covariance(p, m, 0.8, quad, spec);
    CHECK(std::abs(blocks.vxx(0, 0) - scalar.vxx) < 1e-7 * scalar.vxx);
    CHECK(std::abs(blocks.vpp(0, 0) - scalar.vpp) < 1e-7 * scalar.vpp);
    CHECK(blocks.vxp(0, 0) == 0.0);
}

TEST_CASE("two-atom blocks are symmetric with bounded cross terms") {
    AtomParams p(0.05);
    QuadratureSpec quad;
    SommerfeldSpec spec;
    LorentzMedium m{1.0, 1.0, 0.1};
    AtomArray pair(p, {{0.0, 0.0, 0.5}, {1.0, 0.0, 0.9}});
    const CovarianceMatrix blocks = covariance_blocks(pair, m, quad, spec);
    CHECK(blocks.vxx(0, 1) == doctest::Approx(blocks.vxx(1, 0)).epsilon(1e-12));
    CHECK(std::abs(blocks.vxx(0, 1)) < blocks.vxx(0, 0));
    CHECK(std::abs(blocks.vxx(0, 1)) < blocks.vxx(1, 1));
}

TEST_CASE("cutoff diagnostic is populated") {
    AtomParams p(0.25);
    QuadratureSpec quad;
    SommerfeldSpec spec;
    const auto c = covariance(p, LorentzMedium::perfect_conductor(), 1.0,
                              quad, spec);
    // the log tail of the vpp integrand contributes 2 M gamma ln2 / pi
    const double tail = 2.0 * p.mass * p.gamma_a * std::log(2.0) / pi;
    CHECK(c.vpp_cutoff_shift == doctest::Approx(tail / c.vpp).epsilon(0.05));
    CHECK(c.cutoff_warning);  // ~10% at gamma = 0.25, above the 5% threshold

    AtomParams weak(0.05);
    const auto cw = covariance(weak, LorentzMedium::perfect_conductor(), 1.0,
                               quad, spec);
    CHECK_FALSE(cw.cutoff_warning);  // ~3.5% at gamma = 0.05
}

TEST_CASE("cutoff validation") {
    AtomParams p(0.05);
    SommerfeldSpec spec;
    QuadratureSpec quad;
    quad.cutoff = 5.0;
    CHECK_THROWS_AS(covariance(p, LorentzMedium::vacuum(), 1.0, quad, spec),
                    DomainError);
}
