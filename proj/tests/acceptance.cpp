// Acceptance gate: one line per criterion, exit code = number of failures.
// Each criterion is an exact, tolerance-free statement about the engine.

#include "ggp/serialize.hpp"
#include "ggp/verify.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

using ggp::BiPoly;
using ggp::KappaRational;
using ggp::Rational;
using ggp::Suite;
using ggp::SuiteConfig;
using ggp::UniPoly;
using ggp::Weight;

namespace {

int failures = 0;

void criterion(const std::string& name, bool pass) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << "\n" << std::flush;
    if (!pass) ++failures;
}

bool suite_clean(Suite s, int max_degree, int expected_total) {
    SuiteConfig cfg;
    cfg.suites = {s};
    cfg.max_degree = max_degree;
    cfg.jobs = 0;
    const auto rep = ggp::run_suite(cfg);
    return rep.total == expected_total && rep.failed == 0;
}

KappaRational lin(long c0, long c1) {
    return KappaRational(UniPoly::linear(Rational(c0), Rational(c1)));
}

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + GGP_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    CliResult r;
    char buf[4096];
    std::size_t nread;
    while ((nread = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, nread);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

std::map<std::string, std::string> dir_contents(const fs::path& d) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::directory_iterator(d)) {
        std::ifstream in(e.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        out[e.path().filename().string()] = ss.str();
    }
    return out;
}

// m+n <= d triangle size.
constexpr int tri(int d) { return (d + 1) * (d + 2) / 2; }

}  // namespace

int main() {
    criterion("eigenfunction property for all m+n <= 10",
              suite_clean(Suite::eigen, 10, tri(10)));

    criterion("derivative rule in both variables for all m+n <= 10",
              suite_clean(Suite::derivative, 10, 2 * tri(10)));

    {
        SuiteConfig cfg;
        cfg.suites = {Suite::identities};
        cfg.m_max = 25;
        cfg.n_max = 25;
        cfg.jobs = 0;
        const auto rep = ggp::run_suite(cfg);
        criterion("coefficient identities on the full 26x26 grid, certified generic",
                  rep.total == 5 * 26 * 26 && rep.failed == 0 && !rep.note.empty());
    }

    {
        bool ok = suite_clean(Suite::cross, 10, tri(10));
        const auto row = ggp::jack_row(15);
        ok = ok && row.size() == 16;
        for (int m = 0; ok && m <= 15; ++m)
            ok = row[static_cast<std::size_t>(m)].poly == ggp::eigensolve(m, 0).poly;
        criterion("construction routes agree (m+n <= 10; boundary row to m = 15)", ok);
    }

    {
        BiPoly p11 = BiPoly::monomial(Weight{1, 1});
        p11.add_term(Weight{0, 0}, KappaRational(-3) / lin(1, 2));
        BiPoly p20 = BiPoly::monomial(Weight{2, 0});
        p20.add_term(Weight{0, 1}, KappaRational(-2) / lin(1, 1));
        BiPoly p30 = BiPoly::monomial(Weight{3, 0});
        p30.add_term(Weight{1, 1}, KappaRational(-6) / lin(2, 1));
        p30.add_term(Weight{0, 0}, KappaRational(6) / (lin(1, 1) * lin(2, 1)));
        criterion("frozen small members match",
                  ggp::eigensolve(1, 1).poly == p11 && ggp::eigensolve(2, 0).poly == p20 &&
                      ggp::eigensolve(3, 0).poly == p30);
    }

    criterion("rank-one derivative ladder up to m = 30", suite_clean(Suite::a1, 30, 30));

    criterion("index-swap duality for all m+n <= 10",
              suite_clean(Suite::duality, 10, tri(10)));

    {
        bool ok = true;
        for (const Rational& x : {Rational(1), Rational(1, 2), Rational(3)}) {
            ggp::SolveOptions opts;
            opts.kappa = x;
            for (int m = 0; ok && m <= 8; ++m)
                for (int n = 0; ok && m + n <= 8; ++n) {
                    const BiPoly expect = ggp::eigensolve(m, n).poly.specialized(x);
                    ok = ggp::eigensolve(m, n, opts).poly == expect &&
                         ggp::build_by_recurrence(m, n, ggp::Direction::lower_n, opts).poly ==
                             expect;
                }
        }
        criterion("fixed couplings 1, 1/2, 3 match the symbolic family (m+n <= 8)", ok);
    }

    {
        SuiteConfig cfg;
        cfg.max_degree = 6;
        cfg.m_max = 6;
        cfg.n_max = 6;
        cfg.jobs = 0;
        cfg.negative_control = true;
        const auto rep = ggp::run_suite(cfg);
        std::set<std::string> all;
        std::set<std::string> failing;
        for (const auto& r : rep.results) {
            all.insert(r.check);
            if (!r.pass) failing.insert(r.check);
        }
        criterion("negative controls trip every one of the 13 check families",
                  all.size() == 13 && failing == all);
    }

    {
        const fs::path base =
            fs::temp_directory_path() / ("ggp_acceptance_" + std::to_string(::getpid()));
        const fs::path a = base / "a";
        const fs::path b = base / "b";
        fs::remove_all(base);
        fs::create_directories(a);
        fs::create_directories(b);

        bool ok = run_cli("table --max-degree 8 --out \"" + a.string() + "\" --jobs 1").code == 0;
        ok = ok && run_cli("table --max-degree 8 --out \"" + b.string() + "\" --jobs 4").code == 0;
        if (ok) {
            const auto ca = dir_contents(a);
            ok = ca.size() == 45 && ca == dir_contents(b);
            const auto rerun = run_cli("table --max-degree 8 --out \"" + a.string() + "\" --jobs 4");
            ok = ok && rerun.code == 0 &&
                 rerun.out.find("wrote 0 files, skipped 45 unchanged") != std::string::npos &&
                 dir_contents(a) == ca;
        }
        std::error_code ec;
        fs::remove_all(base, ec);
        criterion("table output is byte-identical across worker counts and reruns", ok);
    }

    std::cout << "acceptance: " << (10 - failures) << "/10 criteria passed\n";
    return failures;
}
