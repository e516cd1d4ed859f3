#pragma once

#include "ggp/cs_operator.hpp"

#include <vector>

namespace ggp {

/// Contiguity coefficients of the family.  Each returns the exact rational
/// function of kappa for indices inside its natural range and exact zero
/// outside of it, so the three-term relations below hold verbatim for all
/// integer indices without case analysis.

/// A_{m,n}: nonzero iff m >= 2 and n >= 1.
KappaRational coeff_A(int m, int n);

/// B_{m,n}: nonzero iff n >= 2.
KappaRational coeff_B(int m, int n);

/// a~_{m,n}: nonzero iff m >= 1 and n >= 0.
KappaRational coeff_a_tilde(int m, int n);

/// c_n: nonzero iff n >= 1.
KappaRational coeff_c(int n);

/// The n = 0 boundary row P_{0,0}, ..., P_{max_m,0} from the generating
/// function (1 - z1 t + z2 t^2 - t^3)^{-kappa}: its coefficient row f_m
/// satisfies m f_m = (m-1+kappa) z1 f_{m-1} - (m-2+2kappa) z2 f_{m-2}
/// + (m-3+3kappa) f_{m-3}, and P_{m,0} = m!/(kappa)_m f_m.  In
/// fixed-coupling mode a vanishing (kappa)_m raises PoleError.
std::vector<LabeledGegenbauer> jack_row(int max_m, const SolveOptions& opts = {});

/// Which index the three-term recurrence lowers.
enum class Direction { lower_n, lower_m };

/// Builds P_{m,n} from the boundary row by iterating a three-term relation.
///
/// lower_n:  P_{m,n} = z2 P_{m,n-1} - a~_{m,n-1} P_{m-1,n-1} - c_{n-1} P_{m+1,n-2}
/// lower_m:  P_{m,n} = z1 P_{m-1,n} - a~_{n,m-1} P_{m-1,n-1} - c_{m-1} P_{m-2,n+1}
///
/// lower_n starts from the n = 0 row; lower_m starts from the m = 0 column,
/// which is the variable swap of the n = 0 row.
LabeledGegenbauer build_by_recurrence(int m, int n, Direction dir, const SolveOptions& opts = {});

/// The rank-one analogue: monic P_m in the single variable z1 (generic
/// coupling), built from m f_m = (m-1+kappa) z f_{m-1} - (m-2+2kappa) f_{m-2}
/// and P_m = m!/(kappa)_m f_m.  Satisfies d/dz P_m = m P_{m-1}|_{kappa+1}.
std::vector<BiPoly> a1_row(int max_m);

}  // namespace ggp
