#pragma once

#include "ggp/families.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ggp {

/// Outcome of one exact check.  `residual` carries a printable witness of
/// the defect when the check fails and is empty otherwise; all comparisons
/// are exact, so there are no tolerances anywhere.
struct CheckResult {
    std::string check;
    std::vector<int> indices;
    bool pass = false;
    std::string residual;
    long long elapsed_ns = 0;
};

struct VerificationReport {
    std::string suite;
    std::string engine;
    std::string config;
    std::string note;  // optional certification remark
    int total = 0;
    int passed = 0;
    int failed = 0;
    std::vector<CheckResult> results;
};

/// Pure source of monic family members keyed by (m, n).
using PolySource = std::function<BiPoly(int, int)>;

/// Memoizing, thread-safe source backed by the given construction method
/// (genfunc sources only serve n = 0 and throw otherwise).
PolySource make_source(Method method = Method::eigensolver);

/// Coefficient providers used by relation checks; injectable so corrupted
/// tables can be driven through the same code paths.
struct CoeffTable {
    std::function<KappaRational(int, int)> A = [](int m, int n) { return coeff_A(m, n); };
    std::function<KappaRational(int, int)> B = [](int m, int n) { return coeff_B(m, n); };
    std::function<KappaRational(int, int)> a_tilde = [](int m, int n) { return coeff_a_tilde(m, n); };
    std::function<KappaRational(int)> c = [](int n) { return coeff_c(n); };
};

/// Operator eigenfunction check: apply_operator(P) == eps_{m,n} P.
CheckResult check_eigen(int m, int n, const PolySource& src);

/// Derivative lowers the first index and shifts the coupling:
///   d/dz1 P_{m,n} == m P_{m-1,n}|k+1 + A_{m,n} P_{m-2,n-1}|k+1
///                    + B_{m,n} P_{m,n-2}|k+1.
CheckResult check_derivative_z1(int m, int n, const PolySource& src);

/// Mirror statement for d/dz2 with the coefficient indices transposed:
///   d/dz2 P_{m,n} == n P_{m,n-1}|k+1 + A_{n,m} P_{m-1,n-2}|k+1
///                    + B_{n,m} P_{m-2,n}|k+1.
CheckResult check_derivative_z2(int m, int n, const PolySource& src);

/// The five coefficient identities that make the derivative rule and the
/// three-term recurrences compatible; each is an exact rational-function
/// cancellation at the given (m, n).  Returns checks identity1..identity5.
std::vector<CheckResult> check_identity_set(int m, int n, const CoeffTable& t = {});

/// swap(P_{m,n}) == P_{n,m}.
CheckResult check_duality(int m, int n, const PolySource& src);

/// One step of the three-term relation in the given direction (lower_n
/// needs n >= 1, lower_m needs m >= 1).
CheckResult check_recurrence_step(int m, int n, Direction dir, const PolySource& src,
                                  const CoeffTable& t = {});

/// All construction routes agree: recurrence and twin recurrence against
/// the reference source, and the generating-function row when n == 0.
CheckResult check_cross_method(int m, int n, const PolySource& reference);

/// Rank-one derivative rule d/dz P_m == m P_{m-1}|k+1 against the given
/// boundary row (row[i] must be the rank-one P_i); m >= 1.
CheckResult check_a1_derivative(int m, const std::vector<BiPoly>& row);

enum class Suite { eigen, derivative, recurrence, identities, duality, cross, a1 };

std::string suite_name(Suite s);
std::optional<Suite> suite_from_name(const std::string& name);

struct SuiteConfig {
    std::vector<Suite> suites;        // empty means all of them
    int max_degree = 8;               // bound on m+n for polynomial checks, and on m for a1
    int m_max = 10;                   // identity grid: 0..m_max x 0..n_max
    int n_max = 10;
    int jobs = 1;                     // worker threads; <= 0 picks hardware concurrency
    Method source = Method::eigensolver;  // who provides P_{m,n} to the checks
    bool negative_control = false;    // run against deliberately corrupted inputs
};

/// Runs the selected suites and aggregates the results deterministically
/// (sorted by check name, then indices); the outcome is independent of the
/// number of worker threads.
VerificationReport run_suite(const SuiteConfig& cfg);

}  // namespace ggp
