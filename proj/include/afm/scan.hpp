// scan.hpp - parameter sweeps over distance or damping producing measure
// curves for external plotting.
#pragma once

#include <string>
#include <vector>

#include "afm/measures.hpp"

namespace afm {

enum class ScanAxis { distance, damping };

/// Non-swept parameters of a sweep. For a distance sweep atom.gamma_a is
/// fixed and the grid runs over ell; for a damping sweep ell is fixed (an
/// inert medium models the z -> infinity configuration).
struct ScanFixed {
    AtomParams atom;
    LorentzMedium medium;
    double ell = 1.0;
    QuadratureSpec quad;
    SommerfeldSpec sommerfeld;
};

struct ScanRequest {
    ScanAxis axis = ScanAxis::distance;
    std::vector<double> grid;  // strictly increasing, length >= 2
    ScanFixed fixed;
};

/// One grid row. Failures are recorded in-row and do not abort the scan.
struct ScanRow {
    double axis_value = 0.0;
    bool ok = false;
    std::string error;
    CovariancePoint cov;
    MeasureSet measures;
};

struct ScanResult {
    ScanRequest request;
    std::vector<ScanRow> rows;
};

void validate(const ScanRequest& request);

/// Runs the sweep; rows are ordered by grid index. threads = 1 guarantees
/// bitwise reproducibility. Throws if every row failed.
ScanResult run_scan(const ScanRequest& request, int threads = 1);

/// Log- or linear-spaced grid helper.
std::vector<double> make_grid(double lo, double hi, int points,
                              bool log_spaced);

} // namespace afm
