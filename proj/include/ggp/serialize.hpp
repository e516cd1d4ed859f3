#pragma once

#include "ggp/cs_operator.hpp"
#include "ggp/verify.hpp"

#include <string>

namespace ggp {

/// Canonical JSON form of a labeled polynomial.  Field order, term order
/// (descending total degree, then descending z1-exponent) and the
/// numerator/denominator coefficient lists of each Q(kappa) entry are all
/// fixed, so equal inputs serialize to identical bytes.
std::string to_json(const LabeledGegenbauer& g);

/// Inverse of to_json; throws std::invalid_argument on malformed input.
/// Round-trips exactly: parse_json(to_json(g)) compares equal to g.
LabeledGegenbauer parse_json(const std::string& text);

/// JSON form of a verification report (summary, per-check results with
/// elapsed nanoseconds, engine tag, configuration echo).
std::string to_json(const VerificationReport& r);

/// Plain-text rendering, e.g. "z1 z2 - 3/(2k + 1)".
std::string to_text(const BiPoly& p);

/// LaTeX rendering, e.g. "z_{1}z_{2} - \frac{3}{2\kappa+1}".
std::string to_latex(const BiPoly& p);

}  // namespace ggp
