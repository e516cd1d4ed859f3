#pragma once

#include "ggp/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ggp {

/// Univariate polynomial in the coupling parameter kappa over Rational.
/// Dense coefficient vector, ascending degree, no trailing zeros; the zero
/// polynomial is the empty vector and reports degree() == -1.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
    UniPoly(int c) : UniPoly(Rational(c)) {}
    UniPoly(long c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// The indeterminate itself.
    static UniPoly kappa() { return UniPoly(std::vector<Rational>{0, 1}); }
    /// c0 + c1 * kappa.
    static UniPoly linear(const Rational& c0, const Rational& c1) {
        return UniPoly(std::vector<Rational>{c0, c1});
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Coefficient of kappa^i; zero beyond the degree.
    Rational operator[](int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const Rational& leading() const { return c_.back(); }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }
    UniPoly& scale(const Rational& s);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a.scale(s); }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a.scale(s); }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    Rational eval(const Rational& x) const;

    /// Substitutes kappa -> kappa + delta.
    UniPoly shifted(long delta) const;

    /// Quotient and remainder with deg(r) < deg(d); d must be nonzero.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& d);

    /// Exact quotient; throws std::logic_error on a nonzero remainder.
    UniPoly div_exact(const UniPoly& d) const;

    /// Scales to integer coefficients with content 1 and positive leading
    /// coefficient (the zero polynomial maps to itself).
    UniPoly primitive() const;

    /// Rendering with the given variable symbol, descending powers,
    /// e.g. "2k^2 - k + 3".  `latex` switches to "2k^{2}-k+3" spacing/braces.
    std::string str(const std::string& var = "k", bool latex = false) const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic greatest common divisor (Euclidean over Q with content control).
UniPoly poly_gcd(UniPoly a, UniPoly b);

}  // namespace ggp
