#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ggp/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using ggp::BiPoly;
using ggp::CheckResult;
using ggp::CoeffTable;
using ggp::Direction;
using ggp::KappaRational;
using ggp::Method;
using ggp::PolySource;
using ggp::Suite;
using ggp::SuiteConfig;

namespace {

PolySource corrupted_source() {
    const PolySource honest = ggp::make_source();
    return [honest](int m, int n) { return honest(m, n) + BiPoly::z1(); };
}

}  // namespace

TEST_CASE("individual checks pass on honest inputs") {
    const PolySource src = ggp::make_source();
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n) {
            CHECK(ggp::check_eigen(m, n, src).pass);
            CHECK(ggp::check_derivative_z1(m, n, src).pass);
            CHECK(ggp::check_derivative_z2(m, n, src).pass);
            CHECK(ggp::check_duality(m, n, src).pass);
            CHECK(ggp::check_cross_method(m, n, src).pass);
            if (n >= 1) CHECK(ggp::check_recurrence_step(m, n, Direction::lower_n, src).pass);
            if (m >= 1) CHECK(ggp::check_recurrence_step(m, n, Direction::lower_m, src).pass);
            for (const CheckResult& r : ggp::check_identity_set(m, n)) {
                CHECK(r.pass);
                CHECK(r.residual.empty());
            }
        }
    const auto row = ggp::a1_row(6);
    for (int m = 1; m <= 6; ++m) CHECK(ggp::check_a1_derivative(m, row).pass);
}

TEST_CASE("results carry names, indices, and timing") {
    const PolySource src = ggp::make_source();
    const CheckResult r = ggp::check_eigen(2, 1, src);
    CHECK(r.check == "eigen");
    CHECK(r.indices == std::vector<int>{2, 1});
    CHECK(r.elapsed_ns > 0);
    CHECK(r.residual.empty());

    CHECK(ggp::check_derivative_z1(1, 1, src).check == "derivative-z1");
    CHECK(ggp::check_derivative_z2(1, 1, src).check == "derivative-z2");
    CHECK(ggp::check_duality(1, 0, src).check == "duality");
    CHECK(ggp::check_cross_method(1, 0, src).check == "cross");
    CHECK(ggp::check_recurrence_step(0, 1, Direction::lower_n, src).check == "recurrence-n");
    CHECK(ggp::check_recurrence_step(1, 0, Direction::lower_m, src).check == "recurrence-m");
    CHECK(ggp::check_a1_derivative(2, ggp::a1_row(2)).check == "a1-derivative");
    CHECK(ggp::check_a1_derivative(2, ggp::a1_row(2)).indices == std::vector<int>{2});

    const auto ids = ggp::check_identity_set(3, 3);
    REQUIRE(ids.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(ids[static_cast<std::size_t>(i)].check == "identity" + std::to_string(i + 1));
        CHECK(ids[static_cast<std::size_t>(i)].indices == std::vector<int>{3, 3});
    }
}

TEST_CASE("corrupted polynomials are detected with a printable witness") {
    const PolySource bad = corrupted_source();

    const CheckResult eig = ggp::check_eigen(0, 0, bad);
    CHECK(!eig.pass);
    CHECK(!eig.residual.empty());

    CHECK(!ggp::check_derivative_z1(0, 0, bad).pass);
    CHECK(ggp::check_derivative_z1(0, 0, bad).residual == "1");
    CHECK(!ggp::check_derivative_z2(0, 1, bad).pass);
    CHECK(!ggp::check_duality(0, 0, bad).pass);
    CHECK(!ggp::check_recurrence_step(0, 1, Direction::lower_n, bad).pass);
    CHECK(!ggp::check_recurrence_step(1, 0, Direction::lower_m, bad).pass);

    const CheckResult cross = ggp::check_cross_method(1, 1, bad);
    CHECK(!cross.pass);
    CHECK(cross.residual.rfind("recurrence: ", 0) == 0);

    // z1 + z1 is still an eigenfunction, so this particular cell survives.
    CHECK(ggp::check_eigen(1, 0, bad).pass);
}

TEST_CASE("corrupted coefficient tables are detected") {
    CoeffTable bad;
    bad.a_tilde = [](int m, int n) { return ggp::coeff_a_tilde(m, n) + KappaRational(1); };
    bad.c = [](int n) { return ggp::coeff_c(n) + KappaRational(1); };

    // identity4 gains m - (m - 1) = 1, identity5 gains m - (m + 1) = -1.
    const auto ids = ggp::check_identity_set(0, 0, bad);
    CHECK(!ids[3].pass);
    CHECK(ids[3].residual == "1");
    CHECK(!ids[4].pass);
    CHECK(ids[4].residual == "-1");

    const PolySource src = ggp::make_source();
    CHECK(!ggp::check_recurrence_step(1, 1, Direction::lower_n, src, bad).pass);
    CHECK(!ggp::check_recurrence_step(1, 1, Direction::lower_m, src, bad).pass);

    CoeffTable bad_A;
    bad_A.A = [](int m, int n) { return ggp::coeff_A(m, n) + KappaRational(1); };
    CHECK(!ggp::check_identity_set(3, 3, bad_A)[0].pass);  // identity1 sees A
}

TEST_CASE("corrupted rank-one rows are detected") {
    auto row = ggp::a1_row(4);
    row[3] += BiPoly::z1();
    CHECK(ggp::check_a1_derivative(2, row).pass);
    CHECK(!ggp::check_a1_derivative(3, row).pass);   // d/dz of the damage
    CHECK(!ggp::check_a1_derivative(4, row).pass);   // damaged lowered term
}

TEST_CASE("domain errors on out-of-range requests") {
    const PolySource src = ggp::make_source();
    CHECK_THROWS_AS(ggp::check_recurrence_step(0, 0, Direction::lower_n, src),
                    std::invalid_argument);
    CHECK_THROWS_AS(ggp::check_recurrence_step(0, 0, Direction::lower_m, src),
                    std::invalid_argument);
    const auto row = ggp::a1_row(3);
    CHECK_THROWS_AS(ggp::check_a1_derivative(0, row), std::invalid_argument);
    CHECK_THROWS_AS(ggp::check_a1_derivative(4, row), std::invalid_argument);
}

TEST_CASE("sources are memoized and method-faithful") {
    const PolySource src = ggp::make_source(Method::recurrence);
    const BiPoly first = src(3, 2);
    CHECK(first == src(3, 2));
    CHECK(first == ggp::eigensolve(3, 2).poly);

    const PolySource gf = ggp::make_source(Method::genfunc);
    CHECK(gf(4, 0) == ggp::eigensolve(4, 0).poly);
    CHECK_THROWS_AS(gf(1, 1), std::invalid_argument);
}

TEST_CASE("suite names round-trip") {
    for (Suite s : {Suite::eigen, Suite::derivative, Suite::recurrence, Suite::identities,
                    Suite::duality, Suite::cross, Suite::a1}) {
        const auto back = ggp::suite_from_name(ggp::suite_name(s));
        REQUIRE(back.has_value());
        CHECK(*back == s);
    }
    CHECK(!ggp::suite_from_name("bogus").has_value());
    CHECK(!ggp::suite_from_name("").has_value());
}

TEST_CASE("run_suite counts, sorts, and reports") {
    SuiteConfig cfg;
    cfg.max_degree = 4;
    cfg.m_max = 3;
    cfg.n_max = 3;

    const ggp::VerificationReport rep = ggp::run_suite(cfg);

    // Triangle m+n <= 4 has 15 cells: eigen 15, derivative 30, duality 15,
    // cross 15, recurrence 2*15 - 10 boundary omissions = 20, a1 4,
    // identities 5 * 4 * 4 = 80.
    CHECK(rep.total == 15 + 30 + 20 + 80 + 15 + 15 + 4);
    CHECK(rep.passed == rep.total);
    CHECK(rep.failed == 0);
    CHECK(rep.results.size() == static_cast<std::size_t>(rep.total));
    CHECK(rep.engine == std::string("ggp 0.1.0"));
    CHECK(rep.suite == "eigen,derivative,recurrence,identities,duality,cross,a1");
    CHECK(rep.note.empty());
    CHECK(rep.config.find("max_degree=4") != std::string::npos);
    CHECK(rep.config.find("identity_grid=3x3") != std::string::npos);
    CHECK(rep.config.find("negative_control=off") != std::string::npos);

    const bool sorted = std::is_sorted(
        rep.results.begin(), rep.results.end(), [](const CheckResult& x, const CheckResult& y) {
            return std::tie(x.check, x.indices) < std::tie(y.check, y.indices);
        });
    CHECK(sorted);
}

TEST_CASE("run_suite deduplicates and orders the suite selection") {
    SuiteConfig cfg;
    cfg.suites = {Suite::duality, Suite::eigen, Suite::duality};
    cfg.max_degree = 2;
    const auto rep = ggp::run_suite(cfg);
    CHECK(rep.suite == "eigen,duality");
    CHECK(rep.total == 6 + 6);
}

TEST_CASE("run_suite outcome is independent of the worker count") {
    SuiteConfig cfg;
    cfg.max_degree = 4;
    cfg.m_max = 2;
    cfg.n_max = 2;

    cfg.jobs = 1;
    const auto seq = ggp::run_suite(cfg);
    cfg.jobs = 4;
    const auto par = ggp::run_suite(cfg);

    CHECK(seq.total == par.total);
    CHECK(seq.passed == par.passed);
    REQUIRE(seq.results.size() == par.results.size());
    for (std::size_t i = 0; i < seq.results.size(); ++i) {
        CHECK(seq.results[i].check == par.results[i].check);
        CHECK(seq.results[i].indices == par.results[i].indices);
        CHECK(seq.results[i].pass == par.results[i].pass);
        CHECK(seq.results[i].residual == par.results[i].residual);
    }
}

TEST_CASE("run_suite rejects negative bounds") {
    SuiteConfig cfg;
    cfg.max_degree = -1;
    CHECK_THROWS_AS(ggp::run_suite(cfg), std::invalid_argument);
    cfg.max_degree = 2;
    cfg.m_max = -3;
    CHECK_THROWS_AS(ggp::run_suite(cfg), std::invalid_argument);
}

TEST_CASE("negative control damages every selected family of checks") {
    SuiteConfig cfg;
    cfg.max_degree = 4;
    cfg.m_max = 4;
    cfg.n_max = 4;
    cfg.negative_control = true;
    const auto rep = ggp::run_suite(cfg);
    CHECK(rep.failed > 0);
    CHECK(rep.config.find("negative_control=on") != std::string::npos);
    CHECK(rep.note.empty());

    std::set<std::string> failing;
    std::set<std::string> all;
    for (const auto& r : rep.results) {
        all.insert(r.check);
        if (!r.pass) failing.insert(r.check);
    }
    CHECK(all.size() == 13);
    CHECK(failing == all);  // no check family is blind to the damage
}

TEST_CASE("full identity grid carries the certification note") {
    SuiteConfig cfg;
    cfg.suites = {Suite::identities};
    cfg.m_max = 25;
    cfg.n_max = 25;
    cfg.jobs = 4;
    const auto rep = ggp::run_suite(cfg);
    CHECK(rep.total == 5 * 26 * 26);
    CHECK(rep.failed == 0);
    CHECK(rep.note.find("21x21 block") != std::string::npos);
    CHECK(rep.note.find("generic") != std::string::npos);
}
