#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = "cli_test_stdout.txt";
    const std::string err_path = "cli_test_stderr.txt";
    const std::string cmd = std::string(AFM_CLI_PATH) + " " + args + " > " +
                            out_path + " 2> " + err_path;
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

} // namespace

TEST_CASE("unknown config key exits 2 and names the key") {
    const auto r = run("measures --set atom.gama=0.1");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("atom.gama") != std::string::npos);
}

TEST_CASE("bad scan grid exits 2") {
    const auto r = run("scan --set scan.points=1");
    CHECK(r.exit_code == 2);
    const auto r2 = run("scan --set scan.spacing=cubic");
    CHECK(r2.exit_code == 2);
}

TEST_CASE("greens output is deterministic and carries provenance") {
    const std::string args = "greens --set greens.points=8 --single-thread";
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("# config-hash: ", 0) == 0);
    CHECK(a.out.find("omega,re_g_free,im_g_free,re_g_medium,im_g_medium") !=
          std::string::npos);
    // header + hash + 8 rows
    int lines = 0;
    for (char c : a.out)
        if (c == '\n') ++lines;
    CHECK(lines == 10);

    // a changed override must change the hash
    const auto c = run("greens --set greens.points=8 --set geometry.ell=2");
    CHECK(c.out.substr(0, c.out.find('\n')) !=
          a.out.substr(0, a.out.find('\n')));
}

TEST_CASE("measures emits one csv row and the cutoff diagnostic") {
    const auto r =
        run("measures --set medium.conductor=true --set atom.gamma=0.25");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("cutoff diagnostic") != std::string::npos);

    std::istringstream in(r.out);
    std::string hash_line, header, row, extra;
    std::getline(in, hash_line);
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header ==
          "vxx,vpp,purity,nu,rs,svn,energy,cutoff,err_estimate");
    CHECK_FALSE(std::getline(in, extra));
    int commas = 0;
    for (char c : row)
        if (c == ',') ++commas;
    CHECK(commas == 8);
}

TEST_CASE("scan writes ordered rows to a file") {
    const std::string path = "cli_test_scan.csv";
    const auto r = run("scan --set medium.conductor=true --set scan.min=0.5 "
                       "--set scan.max=2 --set scan.points=4 --out " + path);
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(path);
    std::remove(path.c_str());

    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // hash
    std::getline(in, line);  // header
    CHECK(line.rfind("axis_value,", 0) == 0);
    double prev = 0.0;
    int rows = 0;
    while (std::getline(in, line)) {
        const double z = std::stod(line);
        CHECK(z > prev);
        prev = z;
        ++rows;
    }
    CHECK(rows == 4);
}

TEST_CASE("fdr-check pass and negative control") {
    const auto good = run("fdr-check");
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("PASS") != std::string::npos);

    const auto bad = run("fdr-check --inconsistent");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}
