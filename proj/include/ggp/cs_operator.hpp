#pragma once

#include "ggp/bipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ggp {

/// How a polynomial was constructed.
enum class Method { eigensolver, recurrence, twin_recurrence, genfunc };

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

/// A monic family member P_{m,n} together with its construction metadata.
/// kappa == nullopt means the generic (symbolic) coupling; otherwise every
/// coefficient is the constant obtained at that rational value.
struct LabeledGegenbauer {
    int m = 0;
    int n = 0;
    BiPoly poly;
    Method method = Method::eigensolver;
    std::optional<Rational> kappa;
};

/// Options shared by the constructors: generic coupling by default, or a
/// fixed rational value.
struct SolveOptions {
    std::optional<Rational> kappa;
};

/// Eigenvalue eps_{m,n} = m^2 + n^2 + mn + 3 kappa (m + n) as an element
/// of Q(kappa).
KappaRational eigenvalue(int m, int n);

/// The same eigenvalue evaluated at a fixed coupling.
Rational eigenvalue_at(int m, int n, const Rational& x);

/// Applies the second-order operator
///   (z1^2 - 3 z2) d11 + (z2^2 - 3 z1) d22 + (z1 z2 - 9) d12
///   + (3 kappa + 1)(z1 d1 + z2 d2)
/// term by term via its action on monomials.
BiPoly apply_operator(const BiPoly& p);

/// Dominance order on exponent pairs: mu <= lambda iff lambda - mu is a
/// nonnegative integer combination of (2,-1) and (-1,2).
bool dominance_leq(const Weight& mu, const Weight& lambda);

/// All weights mu <= lambda with nonnegative entries, listed in increasing
/// height (number of root subtractions), ties by descending first exponent.
/// The list starts with lambda itself.
std::vector<Weight> support(const Weight& lambda);

/// Builds the monic eigenfunction with leading term z1^m z2^n by
/// back-substitution along the support.  In generic mode the divisor
/// eps_lambda - eps_mu is a nonconstant polynomial in kappa and never
/// vanishes; in fixed-coupling mode a vanishing divisor raises PoleError.
LabeledGegenbauer eigensolve(int m, int n, const SolveOptions& opts = {});

}  // namespace ggp
