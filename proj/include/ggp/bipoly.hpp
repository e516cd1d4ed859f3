#pragma once

#include "ggp/kappa_rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace ggp {

/// Exponent pair of a monomial z1^a z2^b.
struct Weight {
    int a = 0;
    int b = 0;
    friend bool operator==(const Weight&, const Weight&) = default;
};

/// Term order used everywhere terms are enumerated or exported:
/// descending total degree a+b, ties broken by descending a.
struct WeightOrder {
    bool operator()(const Weight& x, const Weight& y) const {
        const int dx = x.a + x.b;
        const int dy = y.a + y.b;
        if (dx != dy) return dx > dy;
        return x.a > y.a;
    }
};

/// Polynomial in z1, z2 with coefficients in Q(kappa).  The term map never
/// stores a zero coefficient, so is_zero() and operator== are structural.
class BiPoly {
public:
    using TermMap = std::map<Weight, KappaRational, WeightOrder>;

    BiPoly() = default;

    static BiPoly constant(KappaRational c) { return monomial(Weight{0, 0}, std::move(c)); }
    static BiPoly monomial(Weight w, KappaRational c = KappaRational(1));
    static BiPoly z1() { return monomial(Weight{1, 0}); }
    static BiPoly z2() { return monomial(Weight{0, 1}); }

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    /// Coefficient of z1^a z2^b (zero when absent).
    KappaRational coefficient(Weight w) const;

    /// Adds c * z1^w.a z2^w.b, dropping the term if it cancels.
    void add_term(const Weight& w, const KappaRational& c);

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& scale(const KappaRational& s);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const KappaRational& s) { return a.scale(s); }
    friend BiPoly operator*(const KappaRational& s, BiPoly a) { return a.scale(s); }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    /// Partial derivative; axis is 1 (d/dz1) or 2 (d/dz2).
    BiPoly partial(int axis) const;

    /// Applies kappa -> kappa + delta to every coefficient.
    BiPoly shifted_kappa(long delta) const;

    /// Swaps the variables z1 <-> z2.
    BiPoly swapped() const;

    /// Evaluates every coefficient at kappa = x, pruning terms that vanish;
    /// throws PoleError when some coefficient has a pole there.
    BiPoly specialized(const Rational& x) const;

    /// Plain-text rendering such as "z1^2 - z2"; "0" for the zero polynomial.
    std::string str() const;

private:
    TermMap t_;
};

}  // namespace ggp
