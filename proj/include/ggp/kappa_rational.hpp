#pragma once

#include "ggp/rational.hpp"
#include "ggp/unipoly.hpp"

#include <string>
#include <utility>

namespace ggp {

/// Element of the field Q(kappa), kept canonical at all times:
/// numerator and denominator are coprime and the denominator is monic
/// (zero is 0/1).  Equality is therefore plain structural comparison.
class KappaRational {
public:
    KappaRational() : den_(Rational(1)) {}
    KappaRational(const Rational& r) : num_(r), den_(Rational(1)) {}
    KappaRational(int n) : KappaRational(Rational(n)) {}
    KappaRational(long n) : KappaRational(Rational(n)) {}
    KappaRational(const UniPoly& p) : num_(p), den_(Rational(1)) {}

    /// Reduces num/den to canonical form; throws std::invalid_argument
    /// if den is the zero polynomial.
    KappaRational(UniPoly num, UniPoly den);

    static KappaRational kappa() { return KappaRational(UniPoly::kappa()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    KappaRational operator-() const;
    KappaRational inverse() const;

    KappaRational& operator+=(const KappaRational& o) { *this = *this + o; return *this; }
    KappaRational& operator-=(const KappaRational& o) { *this = *this - o; return *this; }
    KappaRational& operator*=(const KappaRational& o) { *this = *this * o; return *this; }
    KappaRational& operator/=(const KappaRational& o) { *this = *this / o; return *this; }

    friend KappaRational operator+(const KappaRational& a, const KappaRational& b);
    friend KappaRational operator-(const KappaRational& a, const KappaRational& b);
    friend KappaRational operator*(const KappaRational& a, const KappaRational& b);
    friend KappaRational operator/(const KappaRational& a, const KappaRational& b);

    friend bool operator==(const KappaRational& a, const KappaRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const KappaRational& a, const KappaRational& b) { return !(a == b); }

    /// Substitutes kappa -> kappa + delta (a field automorphism, so the
    /// result is canonical up to remonicking the denominator).
    KappaRational shifted(long delta) const;

    /// Evaluates at kappa = x; throws PoleError when the denominator
    /// vanishes there.
    Rational eval(const Rational& x) const;

    /// Rendering such as "3/(2k + 1)"; see to_latex in serialize for the
    /// LaTeX form.
    std::string str() const;

private:
    UniPoly num_;
    UniPoly den_;
};

/// Rising factorial (kappa)_m = kappa (kappa+1) ... (kappa+m-1); m >= 0.
KappaRational pochhammer(int m);

/// Display form of a KappaRational: sign together with integer-coefficient
/// numerator and denominator, both with positive leading coefficient and no
/// common integer content.  E.g. -3/(kappa + 1/2) -> (-1, 3, 2*kappa + 1).
struct DisplayParts {
    int sign = 0;  // -1, 0, +1
    UniPoly num;   // positive leading, integer coefficients
    UniPoly den;   // positive leading, integer coefficients; 1 when trivial
};
DisplayParts display_parts(const KappaRational& c);

}  // namespace ggp
