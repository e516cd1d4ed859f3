#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ggp {

/// Exact rational number over arbitrary-precision integers.
/// Always canonical: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const mpz_class& n) : v_(n) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "p" or "p/q" (optional leading '-', decimal digits, q > 0).
    /// Returns nullopt on malformed input or zero denominator.
    static std::optional<Rational> parse(const std::string& text);

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;  // kept canonical
};

/// Evaluation of a rational function at a pole of its denominator.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const Rational& at)
        : std::domain_error("pole at kappa = " + at.str()), at_(at) {}
    const Rational& at() const { return at_; }

private:
    Rational at_;
};

}  // namespace ggp
