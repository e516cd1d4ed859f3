// Command-line front end: generate family members, run verification
// suites, maintain a cache table of serialized polynomials, and benchmark
// the construction methods.
//
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 usage error, 3 pole at the requested coupling, 4 I/O failure.

#include "ggp/families.hpp"
#include "ggp/serialize.hpp"
#include "ggp/verify.hpp"
#include "ggp/version.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPole = 3;
constexpr int kExitIo = 4;

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kExitUsage;
}

int io_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kExitIo;
}

bool read_file(const fs::path& p, std::string& out) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return in.good() || in.eof();
}

bool write_file_atomic(const fs::path& target, const std::string& content, std::string& err) {
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            err = "cannot open " + tmp.string();
            return false;
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            err = "short write to " + tmp.string();
            return false;
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        err = "cannot rename " + tmp.string() + ": " + ec.message();
        fs::remove(tmp, ec);
        return false;
    }
    return true;
}

struct GenArgs {
    int m = 0;
    int n = 0;
    std::string kappa;
    std::string method = "eigensolver";
    std::string format = "json";
    std::string out;
    bool allow_negative_kappa = false;
};

int run_gen(const GenArgs& a) {
    ggp::SolveOptions opts;
    if (!a.kappa.empty()) {
        auto r = ggp::Rational::parse(a.kappa);
        if (!r) return usage_error("malformed --kappa value '" + a.kappa + "' (expected p or p/q)");
        if (r->sign() <= 0 && !a.allow_negative_kappa)
            return usage_error("kappa = " + r->str() +
                               " is not positive; pass --allow-negative-kappa to evaluate there "
                               "(poles may occur and exit with code 3)");
        opts.kappa = *r;
    }
    const auto method = ggp::method_from_name(a.method);
    if (!method) return usage_error("unknown --method '" + a.method + "'");
    if (*method == ggp::Method::genfunc && a.n != 0)
        return usage_error("--method genfunc only generates the n = 0 row");

    ggp::LabeledGegenbauer g;
    try {
        switch (*method) {
            case ggp::Method::eigensolver: g = ggp::eigensolve(a.m, a.n, opts); break;
            case ggp::Method::recurrence:
                g = ggp::build_by_recurrence(a.m, a.n, ggp::Direction::lower_n, opts);
                break;
            case ggp::Method::twin_recurrence:
                g = ggp::build_by_recurrence(a.m, a.n, ggp::Direction::lower_m, opts);
                break;
            case ggp::Method::genfunc:
                g = std::move(ggp::jack_row(a.m, opts)[static_cast<std::size_t>(a.m)]);
                break;
        }
    } catch (const ggp::PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPole;
    }

    std::string text;
    if (a.format == "json") {
        text = ggp::to_json(g);
    } else if (a.format == "text") {
        text = ggp::to_text(g.poly);
    } else if (a.format == "latex") {
        text = ggp::to_latex(g.poly);
    } else {
        return usage_error("unknown --format '" + a.format + "'");
    }
    text += "\n";

    if (a.out.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::string err;
    if (!write_file_atomic(a.out, text, err)) return io_error(err);
    return kExitOk;
}

struct VerifyArgs {
    std::vector<std::string> suites;
    int max_degree = 8;
    int m_max = 10;
    int n_max = 10;
    int jobs = 1;
    std::string source = "eigensolver";
    std::string report;
    bool negative_control = false;
};

int run_verify(const VerifyArgs& a) {
    ggp::SuiteConfig cfg;
    for (const auto& name : a.suites) {
        if (name == "all") {
            cfg.suites.clear();
            break;
        }
        auto s = ggp::suite_from_name(name);
        if (!s) return usage_error("unknown suite '" + name + "'");
        cfg.suites.push_back(*s);
    }
    cfg.max_degree = a.max_degree;
    cfg.m_max = a.m_max;
    cfg.n_max = a.n_max;
    cfg.jobs = a.jobs;
    cfg.negative_control = a.negative_control;
    const auto source = ggp::method_from_name(a.source);
    if (!source) return usage_error("unknown --source '" + a.source + "'");
    if (*source == ggp::Method::genfunc)
        return usage_error("--source genfunc cannot serve checks away from the n = 0 row");
    cfg.source = *source;

    const ggp::VerificationReport rep = ggp::run_suite(cfg);
    for (const auto& r : rep.results) {
        if (r.pass) continue;
        std::cout << "FAIL " << r.check << " (";
        for (std::size_t i = 0; i < r.indices.size(); ++i)
            std::cout << (i ? "," : "") << r.indices[i];
        std::cout << "): " << r.residual << "\n";
    }
    std::cout << rep.suite << ": " << rep.passed << "/" << rep.total << " checks passed";
    if (rep.failed > 0) std::cout << ", " << rep.failed << " FAILED";
    std::cout << "\n";
    if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";

    if (!a.report.empty()) {
        std::string err;
        if (!write_file_atomic(a.report, ggp::to_json(rep) + "\n", err)) return io_error(err);
    }
    return rep.failed == 0 ? kExitOk : kExitVerifyFailed;
}

struct TableArgs {
    int max_degree = 8;
    std::string out;
    int jobs = 1;
};

int run_table(const TableArgs& a) {
    fs::path dir;
    if (!a.out.empty()) {
        dir = a.out;
    } else if (const char* env = std::getenv("GGP_CACHE_DIR"); env && *env) {
        dir = env;
    } else {
        return usage_error("no output directory: pass --out or set GGP_CACHE_DIR");
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return io_error("cannot create " + dir.string() + ": " + ec.message());

    std::vector<std::pair<int, int>> pairs;
    for (int m = 0; m <= a.max_degree; ++m)
        for (int n = 0; n + m <= a.max_degree; ++n) pairs.emplace_back(m, n);

    std::atomic<std::size_t> next{0};
    std::atomic<int> written{0};
    std::atomic<int> skipped{0};
    std::mutex err_mu;
    std::string first_err;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= pairs.size()) return;
            const auto [m, n] = pairs[i];
            const std::string body =
                ggp::to_json(ggp::eigensolve(m, n)) + "\n";
            const fs::path target =
                dir / ("a2_m" + std::to_string(m) + "_n" + std::to_string(n) + ".json");
            std::string existing;
            if (read_file(target, existing) && existing == body) {
                skipped.fetch_add(1);
                continue;
            }
            std::string err;
            if (!write_file_atomic(target, body, err)) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (first_err.empty()) first_err = err;
                return;
            }
            written.fetch_add(1);
        }
    };

    int jobs = a.jobs;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(pairs.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (!first_err.empty()) return io_error(first_err);
    std::cout << "table: wrote " << written.load() << " files, skipped " << skipped.load()
              << " unchanged in " << dir.string() << "\n";
    return kExitOk;
}

struct BenchArgs {
    int max_degree = 6;
    std::vector<std::string> methods = {"eigensolver", "recurrence"};
};

int run_bench(const BenchArgs& a) {
    std::vector<ggp::Method> methods;
    for (const auto& name : a.methods) {
        auto m = ggp::method_from_name(name);
        if (!m) return usage_error("unknown --method '" + name + "'");
        methods.push_back(*m);
    }

    std::printf("%4s %4s %6s", "m", "n", "terms");
    for (const auto& m : methods) std::printf(" %15s", (ggp::method_name(m) + "_us").c_str());
    std::printf("\n");

    for (int total = 0; total <= a.max_degree; ++total) {
        for (int m = total; m >= 0; --m) {
            const int n = total - m;
            std::size_t terms = 0;
            std::vector<std::string> cells;
            for (const auto& method : methods) {
                if (method == ggp::Method::genfunc && n != 0) {
                    cells.push_back("-");
                    continue;
                }
                const auto t0 = std::chrono::steady_clock::now();
                ggp::BiPoly p;
                switch (method) {
                    case ggp::Method::eigensolver: p = ggp::eigensolve(m, n).poly; break;
                    case ggp::Method::recurrence:
                        p = ggp::build_by_recurrence(m, n, ggp::Direction::lower_n).poly;
                        break;
                    case ggp::Method::twin_recurrence:
                        p = ggp::build_by_recurrence(m, n, ggp::Direction::lower_m).poly;
                        break;
                    case ggp::Method::genfunc:
                        p = ggp::jack_row(m)[static_cast<std::size_t>(m)].poly;
                        break;
                }
                const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
                cells.push_back(std::to_string(us));
                terms = p.term_count();
            }
            std::printf("%4d %4d %6zu", m, n, terms);
            for (const auto& c : cells) std::printf(" %15s", c.c_str());
            std::printf("\n");
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generalized Gegenbauer engine over Q(kappa)"};
    app.set_version_flag("--version", ggp::kVersion);
    app.require_subcommand(0, 1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Generate one family member");
    gen->add_option("--m", gen_args.m, "First index (degree in z1)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--n", gen_args.n, "Second index (degree in z2)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--kappa", gen_args.kappa,
                    "Fix the coupling to a rational value p/q (default: symbolic)");
    gen->add_option("--method", gen_args.method, "Construction route")
        ->check(CLI::IsMember({"eigensolver", "recurrence", "twin-recurrence", "genfunc"}));
    gen->add_option("--format", gen_args.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "latex"}));
    gen->add_option("--out", gen_args.out, "Write output to this file instead of stdout");
    gen->add_flag("--allow-negative-kappa", gen_args.allow_negative_kappa,
                  "Permit kappa <= 0 (poles exit with code 3)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run exact verification suites");
    verify->add_option("suites", verify_args.suites,
                       "Suites: eigen derivative recurrence identities duality cross a1 all")
        ->check(CLI::IsMember(
            {"eigen", "derivative", "recurrence", "identities", "duality", "cross", "a1", "all"}));
    verify->add_option("--max-degree", verify_args.max_degree, "Bound on m+n (and on m for a1)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--m-max", verify_args.m_max, "Identity grid bound on m")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--n-max", verify_args.n_max, "Identity grid bound on n")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", verify_args.jobs, "Worker threads (0 = hardware)");
    verify->add_option("--source", verify_args.source,
                       "Which construction serves the checked polynomials")
        ->check(CLI::IsMember({"eigensolver", "recurrence", "twin-recurrence"}));
    verify->add_option("--report", verify_args.report, "Write a JSON report to this file");
    verify->add_flag("--negative-control", verify_args.negative_control,
                     "Verify against deliberately corrupted inputs (expects failures)");

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "Write the serialized family table to a directory");
    table->add_option("--max-degree", table_args.max_degree, "Bound on m+n")
        ->check(CLI::NonNegativeNumber);
    table->add_option("--out", table_args.out, "Target directory (default: $GGP_CACHE_DIR)");
    table->add_option("--jobs", table_args.jobs, "Worker threads (0 = hardware)");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Time the construction methods");
    bench->add_option("--max-degree", bench_args.max_degree, "Bound on m+n")
        ->check(CLI::NonNegativeNumber);
    bench->add_option("--method", bench_args.methods, "Methods to time (repeatable)")
        ->check(CLI::IsMember({"eigensolver", "recurrence", "twin-recurrence", "genfunc"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (table->parsed()) return run_table(table_args);
        if (bench->parsed()) return run_bench(bench_args);
    } catch (const ggp::PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPole;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }

    std::cerr << app.help();
    return kExitUsage;
}
