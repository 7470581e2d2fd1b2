#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "afm/fdr.hpp"

using namespace afm;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> standard_grid() {
    std::vector<double> g;
    for (int k = 1; k <= 200; ++k) g.push_back(0.05 * k);
    return g;
}
} // namespace

TEST_CASE("field fdr residual") {
    CHECK(field_fdr_residual(1.0, kInf) < 1e-14);
    CHECK(field_fdr_residual(1.0, 1.0) < 1e-12);
    CHECK(field_fdr_residual(0.1, 10.0) < 1e-12);
    CHECK_THROWS_AS(field_fdr_residual(0.0, 1.0), DomainError);
}

TEST_CASE("atomic reciprocal identity") {
    AtomParams p(0.05);
    for (double w : {0.1, 1.0, 10.0})
        CHECK(atom_im_identity_residual(w, p) < 1e-12);
}

TEST_CASE("full suite over the standard grid") {
    const auto grid = standard_grid();
    for (double beta : {kInf, 10.0, 1.0})
        for (double gamma : {0.05, 0.25}) {
            const FdrReport rep =
                run_fdr_check(grid, beta, AtomParams(gamma));
            CHECK(rep.pass);
            CHECK(rep.max_residual <= 1e-10);
            CHECK(rep.omega_grid.size() == 200);
        }
}

TEST_CASE("negative control fails off resonance") {
    AtomParams p(0.05);
    // the inconsistent reduction leaves the factor w^2/Omega^2 uncancelled
    CHECK(atom_fdr_residual(3.0, kInf, p, true) ==
          doctest::Approx(8.0).epsilon(1e-6));
    CHECK(atom_fdr_residual(1.0, kInf, p, true) < 1e-10);

    const auto grid = standard_grid();
    const FdrReport bad = run_fdr_check(grid, kInf, p, true);
    const FdrReport good = run_fdr_check(grid, kInf, p, false);
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_residual > 0.1);
    CHECK(bad.max_residual / good.max_residual > 1e6);
}
