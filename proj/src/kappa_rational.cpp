#include "ggp/kappa_rational.hpp"

#include <stdexcept>

namespace ggp {

KappaRational::KappaRational(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw std::invalid_argument("KappaRational: zero denominator");
    if (num.is_zero()) {
        num_ = UniPoly();
        den_ = UniPoly(Rational(1));
        return;
    }
    const UniPoly g = poly_gcd(num, den);
    if (!g.is_one()) {
        num = num.div_exact(g);
        den = den.div_exact(g);
    }
    // Monic denominator fixes the representative uniquely.
    const Rational lead = den.leading();
    if (!lead.is_one()) {
        const Rational inv = Rational(1) / lead;
        num.scale(inv);
        den.scale(inv);
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

KappaRational KappaRational::operator-() const {
    KappaRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

KappaRational KappaRational::inverse() const {
    if (is_zero()) throw std::invalid_argument("KappaRational: inverse of zero");
    return KappaRational(den_, num_);
}

KappaRational operator+(const KappaRational& a, const KappaRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return KappaRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

KappaRational operator-(const KappaRational& a, const KappaRational& b) {
    if (b.is_zero()) return a;
    return KappaRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

KappaRational operator*(const KappaRational& a, const KappaRational& b) {
    if (a.is_zero() || b.is_zero()) return KappaRational();
    return KappaRational(a.num_ * b.num_, a.den_ * b.den_);
}

KappaRational operator/(const KappaRational& a, const KappaRational& b) {
    if (b.is_zero()) throw std::invalid_argument("KappaRational: division by zero");
    if (a.is_zero()) return KappaRational();
    return KappaRational(a.num_ * b.den_, a.den_ * b.num_);
}

KappaRational KappaRational::shifted(long delta) const {
    if (delta == 0 || is_constant()) return *this;
    return KappaRational(num_.shifted(delta), den_.shifted(delta));
}

Rational KappaRational::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero()) throw PoleError(x);
    return num_.eval(x) / d;
}

std::string KappaRational::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    if (num_.degree() > 0 || n.find('/') != std::string::npos) n = "(" + n + ")";
    std::string d = den_.str();
    if (den_.degree() > 0 || d.find('/') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

DisplayParts display_parts(const KappaRational& c) {
    DisplayParts out;
    if (c.is_zero()) {
        out.den = UniPoly(Rational(1));
        return out;
    }
    const UniPoly n = c.num().primitive();
    const UniPoly d = c.den().primitive();
    // c == f * n/d with f = (lead(num)/lead(n)) / (lead(den)/lead(d)).
    const Rational f = (c.num().leading() / n.leading()) / (c.den().leading() / d.leading());
    out.sign = f.sign();
    const Rational mag = out.sign < 0 ? -f : f;
    out.num = n * Rational(mag.num());
    out.den = d * Rational(mag.den());
    return out;
}

KappaRational pochhammer(int m) {
    if (m < 0) throw std::invalid_argument("pochhammer: negative index");
    UniPoly p(Rational(1));
    for (int i = 0; i < m; ++i) p *= UniPoly::linear(Rational(i), Rational(1));
    return KappaRational(p);
}

}  // namespace ggp
