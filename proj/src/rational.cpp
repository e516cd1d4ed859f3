#include "ggp/rational.hpp"

#include <cctype>
#include <ostream>

namespace ggp {

std::optional<Rational> Rational::parse(const std::string& text) {
    // Accept: -?[0-9]+(/[0-9]+)?  with a nonzero denominator.
    std::size_t i = 0;
    const std::size_t n = text.size();
    if (i < n && text[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) return std::nullopt;

    std::string num = text.substr(0, i);
    std::string den = "1";
    if (i < n) {
        if (text[i] != '/') return std::nullopt;
        ++i;
        std::size_t den_begin = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != n) return std::nullopt;
        den = text.substr(den_begin);
    }

    mpz_class d(den);
    if (d == 0) return std::nullopt;
    return Rational(mpz_class(num), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace ggp
