// scan.cpp
#include "afm/scan.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace afm {

void validate(const ScanRequest& request) {
    if (request.grid.size() < 2)
        throw DomainError("scan: grid needs at least 2 points");
    for (size_t i = 0; i + 1 < request.grid.size(); ++i)
        if (!(request.grid[i] < request.grid[i + 1]))
            throw DomainError("scan: grid must be strictly increasing");
    if (request.axis == ScanAxis::distance)
        for (double z : request.grid)
            if (z <= 0.0) throw DomainError("scan: distance grid values > 0");
}

namespace {

ScanRow evaluate_row(const ScanRequest& req, double x) {
    ScanRow row;
    row.axis_value = x;
    try {
        const ScanFixed& fx = req.fixed;
        AtomParams atom = fx.atom;
        double ell = fx.ell;
        if (req.axis == ScanAxis::distance) ell = x;
        else atom = AtomParams(x, fx.atom.mass, fx.atom.omega_a);
        row.cov = covariance(atom, fx.medium, ell, fx.quad, fx.sommerfeld);
        row.measures = measures_from(row.cov.vxx, row.cov.vpp, atom);
        row.ok = true;
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
    }
    return row;
}

} // namespace

ScanResult run_scan(const ScanRequest& request, int threads) {
    validate(request);
    ScanResult result;
    result.request = request;
    result.rows.resize(request.grid.size());

    if (threads <= 1) {
        for (size_t i = 0; i < request.grid.size(); ++i)
            result.rows[i] = evaluate_row(request, request.grid[i]);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < request.grid.size();
                 i = next.fetch_add(1))
                result.rows[i] = evaluate_row(request, request.grid[i]);
        };
        std::vector<std::thread> pool;
        const int n = std::min<int>(threads, request.grid.size());
        pool.reserve(n);
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    bool any_ok = false;
    for (const auto& r : result.rows) any_ok = any_ok || r.ok;
    if (!any_ok) throw InstabilityError("scan: every row failed");
    return result;
}

std::vector<double> make_grid(double lo, double hi, int points,
                              bool log_spaced) {
    if (points < 2) throw DomainError("make_grid: need at least 2 points");
    if (!(lo < hi)) throw DomainError("make_grid: lo < hi required");
    if (log_spaced && lo <= 0.0)
        throw DomainError("make_grid: log spacing needs lo > 0");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        g[i] = log_spaced ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
    }
    return g;
}

} // namespace afm
