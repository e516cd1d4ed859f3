#include "ggp/bipoly.hpp"

#include <stdexcept>

namespace ggp {

BiPoly BiPoly::monomial(Weight w, KappaRational c) {
    BiPoly p;
    if (!c.is_zero()) p.t_.emplace(w, std::move(c));
    return p;
}

KappaRational BiPoly::coefficient(Weight w) const {
    auto it = t_.find(w);
    return it == t_.end() ? KappaRational() : it->second;
}

void BiPoly::add_term(const Weight& w, const KappaRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
}

BiPoly& BiPoly::scale(const KappaRational& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [w, c] : t_) c *= s;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [wa, ca] : a.t_)
        for (const auto& [wb, cb] : b.t_)
            r.add_term(Weight{wa.a + wb.a, wa.b + wb.b}, ca * cb);
    return r;
}

BiPoly BiPoly::partial(int axis) const {
    if (axis != 1 && axis != 2) throw std::invalid_argument("BiPoly::partial: axis must be 1 or 2");
    BiPoly r;
    for (const auto& [w, c] : t_) {
        if (axis == 1 && w.a > 0) r.add_term(Weight{w.a - 1, w.b}, c * KappaRational(w.a));
        if (axis == 2 && w.b > 0) r.add_term(Weight{w.a, w.b - 1}, c * KappaRational(w.b));
    }
    return r;
}

BiPoly BiPoly::shifted_kappa(long delta) const {
    if (delta == 0) return *this;
    BiPoly r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, c.shifted(delta));
    return r;
}

BiPoly BiPoly::swapped() const {
    BiPoly r;
    for (const auto& [w, c] : t_) r.t_.emplace(Weight{w.b, w.a}, c);
    return r;
}

BiPoly BiPoly::specialized(const Rational& x) const {
    BiPoly r;
    for (const auto& [w, c] : t_) {
        const Rational v = c.eval(x);  // may throw PoleError
        if (!v.is_zero()) r.t_.emplace(w, KappaRational(v));
    }
    return r;
}

namespace {

std::string monomial_str(const Weight& w) {
    std::string s;
    if (w.a > 0) {
        s += "z1";
        if (w.a > 1) s += "^" + std::to_string(w.a);
    }
    if (w.b > 0) {
        if (!s.empty()) s += " ";
        s += "z2";
        if (w.b > 1) s += "^" + std::to_string(w.b);
    }
    return s;
}

// |c| in text form, e.g. "3", "3/2", "3/(2k + 1)", "(k + 3)/(2k + 1)".
std::string magnitude_str(const DisplayParts& p) {
    std::string n = p.num.degree() > 0 ? "(" + p.num.str() + ")" : p.num.str();
    if (p.den.is_one()) return n;
    std::string d = p.den.degree() > 0 ? "(" + p.den.str() + ")" : p.den.str();
    return n + "/" + d;
}

}  // namespace

std::string BiPoly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : t_) {
        const DisplayParts parts = display_parts(c);
        if (out.empty()) {
            if (parts.sign < 0) out += "-";
        } else {
            out += parts.sign < 0 ? " - " : " + ";
        }
        const std::string mono = monomial_str(w);
        std::string mag = magnitude_str(parts);
        if (mono.empty()) {
            out += mag;
        } else if (mag == "1") {
            out += mono;
        } else {
            // Quotients get parenthesized so "a/(b) z" cannot misread.
            if (mag.find('/') != std::string::npos) mag = "(" + mag + ")";
            out += mag + " " + mono;
        }
    }
    return out;
}

}  // namespace ggp
