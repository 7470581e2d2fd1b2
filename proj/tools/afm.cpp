// afm.cpp - command-line front end: greens | measures | scan | fdr-check
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "afm/config.hpp"
#include "afm/fdr.hpp"

namespace {

using namespace afm;

struct CommonOpts {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_path;
    int threads = 1;
    bool single_thread = false;
};

Config load_config(const CommonOpts& opts) {
    Config cfg;
    if (!opts.config_path.empty()) cfg = Config::from_file(opts.config_path);
    cfg.merge_overrides(opts.overrides);
    cfg.validate_keys();
    return cfg;
}

struct OutputStream {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit OutputStream(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw ConfigError("cannot open output file " + path);
            os = &file;
        }
    }
    std::ostream& get() { return *os; }
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "config file (key = value lines)");
    cmd->add_option("--set", opts.overrides, "override, key=value (repeatable)");
    cmd->add_option("--out", opts.out_path, "output path (default stdout)");
    cmd->add_option("--threads", opts.threads, "worker threads");
    cmd->add_flag("--single-thread", opts.single_thread,
                  "bitwise-reproducible single-threaded mode");
}

int thread_count(const CommonOpts& opts) {
    return opts.single_thread ? 1 : std::max(1, opts.threads);
}

// geometry.ell = inf selects the no-medium configuration
LorentzMedium effective_medium(const Config& cfg) {
    if (std::isinf(cfg.ell())) return LorentzMedium::vacuum();
    return cfg.medium();
}

int cmd_greens(const CommonOpts& opts) {
    Config cfg = load_config(opts);
    OutputStream out(opts.out_path);
    const LorentzMedium medium = cfg.medium();
    const SommerfeldSpec som = cfg.sommerfeld();
    const double ell = cfg.ell();
    const double lo = cfg.get_double("greens.omega_min", 0.1);
    const double hi = cfg.get_double("greens.omega_max", 5.0);
    const int points = cfg.get_int("greens.points", 50);
    auto grid = make_grid(lo, hi, points, false);

    out.get() << "# config-hash: " << cfg.hash() << "\n";
    out.get() << "omega,re_g_free,im_g_free,re_g_medium,im_g_medium\n";
    for (double w : grid) {
        // free part at the image distance 2*ell (the coincident free part
        // is divergent and already absorbed into the atom parameters)
        const cd gf = g_free(w, 2.0 * ell);
        const cd gm = g_medium(w, Geometry::coincident(ell), medium, som);
        out.get() << fmt(w) << ',' << fmt(gf.real()) << ',' << fmt(gf.imag())
                  << ',' << fmt(gm.real()) << ',' << fmt(gm.imag()) << '\n';
    }
    return 0;
}

int cmd_measures(const CommonOpts& opts) {
    Config cfg = load_config(opts);
    OutputStream out(opts.out_path);
    const AtomParams atom = cfg.atom();
    const LorentzMedium medium = effective_medium(cfg);
    const QuadratureSpec quad = cfg.quadrature();
    const SommerfeldSpec som = cfg.sommerfeld();
    const double ell = std::isinf(cfg.ell()) ? 1.0 : cfg.ell();

    const CovariancePoint cov = covariance(atom, medium, ell, quad, som);
    const MeasureSet m = measures_from(cov.vxx, cov.vpp, atom);

    std::cerr << "cutoff diagnostic: |V_PP(L) - V_PP(L/2)| / V_PP = "
              << fmt(cov.vpp_cutoff_shift)
              << (cov.cutoff_warning ? " (above 5% sensitivity threshold)"
                                     : "")
              << "\n";

    out.get() << "# config-hash: " << cfg.hash() << "\n";
    out.get() << "vxx,vpp,purity,nu,rs,svn,energy,cutoff,err_estimate\n";
    out.get() << fmt(cov.vxx) << ',' << fmt(cov.vpp) << ',' << fmt(m.purity)
              << ',' << fmt(m.nu) << ',' << fmt(m.rs) << ',' << fmt(m.svn)
              << ',' << fmt(m.energy) << ',' << fmt(cov.cutoff) << ','
              << fmt(cov.err_estimate) << '\n';
    return 0;
}

int cmd_scan(const CommonOpts& opts) {
    Config cfg = load_config(opts);
    OutputStream out(opts.out_path);

    ScanRequest req;
    const std::string axis = cfg.get_string("scan.axis", "distance");
    if (axis == "distance") req.axis = ScanAxis::distance;
    else if (axis == "damping") req.axis = ScanAxis::damping;
    else throw ConfigError("config: scan.axis must be distance or damping");

    const bool distance = req.axis == ScanAxis::distance;
    const double lo = cfg.get_double("scan.min", distance ? 0.02 : 0.05);
    const double hi = cfg.get_double("scan.max", distance ? 10.0 : 0.45);
    const int points = cfg.get_int("scan.points", distance ? 40 : 5);
    if (points < 2) throw ConfigError("config: scan.points must be >= 2");
    const std::string spacing =
        cfg.get_string("scan.spacing", distance ? "log" : "linear");
    if (spacing != "log" && spacing != "linear")
        throw ConfigError("config: scan.spacing must be log or linear");
    req.grid = make_grid(lo, hi, points, spacing == "log");

    req.fixed.atom = cfg.atom();
    req.fixed.medium = effective_medium(cfg);
    req.fixed.ell = std::isinf(cfg.ell()) ? 1.0 : cfg.ell();
    req.fixed.quad = cfg.quadrature();
    req.fixed.sommerfeld = cfg.sommerfeld();

    const ScanResult res = run_scan(req, thread_count(opts));

    out.get() << "# config-hash: " << cfg.hash() << "\n";
    out.get() << "axis_value,vxx,vpp,purity,nu,rs,svn,energy,cutoff,"
                 "err_estimate,error\n";
    for (const auto& row : res.rows) {
        out.get() << fmt(row.axis_value) << ',';
        if (row.ok) {
            const auto& m = row.measures;
            out.get() << fmt(row.cov.vxx) << ',' << fmt(row.cov.vpp) << ','
                      << fmt(m.purity) << ',' << fmt(m.nu) << ',' << fmt(m.rs)
                      << ',' << fmt(m.svn) << ',' << fmt(m.energy) << ','
                      << fmt(row.cov.cutoff) << ',' << fmt(row.cov.err_estimate)
                      << ",\n";
        } else {
            out.get() << "nan,nan,nan,nan,nan,nan,nan,nan,nan,"
                      << row.error << '\n';
        }
    }
    return 0;
}

int cmd_fdr_check(const CommonOpts& opts, bool inconsistent, double beta_flag) {
    Config cfg = load_config(opts);
    OutputStream out(opts.out_path);
    const AtomParams atom = cfg.atom();
    double beta = cfg.get_double("quad.beta",
                                 std::numeric_limits<double>::infinity());
    if (beta_flag > 0.0) beta = beta_flag;

    std::vector<double> grid;
    for (int k = 1; k <= 200; ++k) grid.push_back(0.05 * k);
    const FdrReport rep = run_fdr_check(grid, beta, atom, inconsistent);

    out.get() << "# config-hash: " << cfg.hash() << "\n";
    out.get() << "omega,residual_field,residual_atom,residual_fdr\n";
    for (size_t i = 0; i < rep.omega_grid.size(); ++i)
        out.get() << fmt(rep.omega_grid[i]) << ','
                  << fmt(rep.residual_field[i]) << ','
                  << fmt(rep.residual_atom[i]) << ','
                  << fmt(rep.residual_fdr[i]) << '\n';
    out.get() << (rep.pass ? "PASS" : "FAIL")
              << " max_residual=" << fmt(rep.max_residual) << '\n';
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"late-time covariances and entanglement measures of a "
                 "harmonic atom above a dielectric half-space"};
    app.require_subcommand(1);

    CommonOpts greens_opts, measures_opts, scan_opts, fdr_opts;
    bool inconsistent = false;
    double beta_flag = -1.0;

    auto* greens = app.add_subcommand(
        "greens", "field Green's functions over a frequency grid");
    add_common(greens, greens_opts);
    auto* measures = app.add_subcommand(
        "measures", "covariances and measures at one parameter point");
    add_common(measures, measures_opts);
    auto* scan =
        app.add_subcommand("scan", "measure sweep over distance or damping");
    add_common(scan, scan_opts);
    auto* fdr = app.add_subcommand("fdr-check",
                                   "fluctuation-dissipation residual suite");
    add_common(fdr, fdr_opts);
    fdr->add_flag("--inconsistent", inconsistent,
                  "negative control: dissipation-only order reduction");
    fdr->add_option("--beta", beta_flag, "inverse temperature override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (greens->parsed()) return cmd_greens(greens_opts);
        if (measures->parsed()) return cmd_measures(measures_opts);
        if (scan->parsed()) return cmd_scan(scan_opts);
        if (fdr->parsed())
            return cmd_fdr_check(fdr_opts, inconsistent, beta_flag);
    } catch (const afm::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
