#include "ggp/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ggp {

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::scale(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::shifted(long delta) const {
    const UniPoly base = UniPoly::linear(Rational(delta), Rational(1));  // kappa + delta
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * base + UniPoly(*it);
    return acc;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("UniPoly: division by zero polynomial");
    UniPoly r = a;
    std::vector<Rational> q;
    if (r.degree() >= d.degree()) q.assign(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const int k = r.degree() - d.degree();
        const Rational f = r.leading() / d.leading();
        q[static_cast<std::size_t>(k)] = f;
        // r -= f * kappa^k * d
        std::vector<Rational> sub(static_cast<std::size_t>(k), Rational(0));
        for (const auto& c : d.coeffs()) sub.push_back(c * f);
        r -= UniPoly(std::move(sub));
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::div_exact(const UniPoly& d) const {
    auto [q, r] = divmod(*this, d);
    if (!r.is_zero()) throw std::logic_error("UniPoly: inexact division");
    return q;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return UniPoly();
    mpz_class lcm_den(1);
    for (const auto& c : c_) {
        mpz_class d = c.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
        lcm_den = lcm_den / g * d;
    }
    std::vector<mpz_class> ints;
    ints.reserve(c_.size());
    mpz_class content(0);
    for (const auto& c : c_) {
        mpz_class v = c.num() * (lcm_den / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (sgn(ints.back()) < 0) content = -content;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (const auto& v : ints) out.emplace_back(mpz_class(v / content));
    return UniPoly(std::move(out));
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    UniPoly x = a.primitive();
    UniPoly y = b.primitive();
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = std::move(y);
        y = r.primitive();
    }
    if (x.is_zero()) return x;
    return x.scale(Rational(1) / x.leading());
}

namespace {

// One coefficient as it appears in front of a power of the variable.
std::string coeff_str(const Rational& mag, bool latex, bool has_power) {
    if (latex) {
        if (mag.den() == 1) return mag.num().get_str();
        return "\\frac{" + mag.num().get_str() + "}{" + mag.den().get_str() + "}";
    }
    std::string s = mag.str();
    if (has_power && mag.den() != 1) return "(" + s + ")";
    return s;
}

}  // namespace

std::string UniPoly::str(const std::string& var, bool latex) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational c = (*this)[i];
        if (c.is_zero()) continue;
        const bool first = out.empty();
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += latex ? (neg ? "-" : "+") : (neg ? " - " : " + ");
        }
        const Rational mag = neg ? -c : c;
        std::string pow;
        if (i == 1) {
            pow = var;
        } else if (i > 1) {
            pow = latex ? var + "^{" + std::to_string(i) + "}" : var + "^" + std::to_string(i);
        }
        if (pow.empty()) {
            out += coeff_str(mag, latex, false);
        } else {
            if (!mag.is_one()) out += coeff_str(mag, latex, true);
            out += pow;
        }
    }
    return out;
}

}  // namespace ggp
