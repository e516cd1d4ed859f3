#include "ggp/cs_operator.hpp"

#include <map>
#include <stdexcept>

namespace ggp {

std::string method_name(Method m) {
    switch (m) {
        case Method::eigensolver: return "eigensolver";
        case Method::recurrence: return "recurrence";
        case Method::twin_recurrence: return "twin-recurrence";
        case Method::genfunc: return "genfunc";
    }
    throw std::logic_error("method_name: unknown method");
}

std::optional<Method> method_from_name(const std::string& name) {
    if (name == "eigensolver") return Method::eigensolver;
    if (name == "recurrence") return Method::recurrence;
    if (name == "twin-recurrence") return Method::twin_recurrence;
    if (name == "genfunc") return Method::genfunc;
    return std::nullopt;
}

KappaRational eigenvalue(int m, int n) {
    const long quad = static_cast<long>(m) * m + static_cast<long>(n) * n + static_cast<long>(m) * n;
    return KappaRational(UniPoly::linear(Rational(quad), Rational(3L * (m + n))));
}

Rational eigenvalue_at(int m, int n, const Rational& x) {
    const long quad = static_cast<long>(m) * m + static_cast<long>(n) * n + static_cast<long>(m) * n;
    return Rational(quad) + Rational(3L * (m + n)) * x;
}

BiPoly apply_operator(const BiPoly& p) {
    BiPoly out;
    for (const auto& [w, c] : p.terms()) {
        const long a = w.a;
        const long b = w.b;
        // Diagonal part: eps_{a,b}(kappa) z1^a z2^b.
        out.add_term(w, c * eigenvalue(w.a, w.b));
        // (z1^2 - 3 z2) d11 contributes -3 a(a-1) z1^{a-2} z2^{b+1}.
        if (a >= 2) out.add_term(Weight{w.a - 2, w.b + 1}, c * KappaRational(-3 * a * (a - 1)));
        // (z2^2 - 3 z1) d22 contributes -3 b(b-1) z1^{a+1} z2^{b-2}.
        if (b >= 2) out.add_term(Weight{w.a + 1, w.b - 2}, c * KappaRational(-3 * b * (b - 1)));
        // (z1 z2 - 9) d12 contributes -9 ab z1^{a-1} z2^{b-1}.
        if (a >= 1 && b >= 1) out.add_term(Weight{w.a - 1, w.b - 1}, c * KappaRational(-9 * a * b));
    }
    return out;
}

bool dominance_leq(const Weight& mu, const Weight& lambda) {
    // lambda - mu = p (2,-1) + q (-1,2) needs p = (2 d1 + d2)/3 and
    // q = (d1 + 2 d2)/3 to be nonnegative integers.
    const int d1 = lambda.a - mu.a;
    const int d2 = lambda.b - mu.b;
    const int s = 2 * d1 + d2;
    const int t = d1 + 2 * d2;
    return s >= 0 && t >= 0 && s % 3 == 0 && t % 3 == 0;
}

std::vector<Weight> support(const Weight& lambda) {
    std::vector<Weight> out;
    // Each root subtraction lowers a+b by one, so the height is bounded by
    // the total degree and enumerating by height gives the required order.
    for (int h = 0; h <= lambda.a + lambda.b; ++h) {
        for (int p = 0; p <= h; ++p) {
            const int q = h - p;
            const int a = lambda.a - 2 * p + q;
            const int b = lambda.b + p - 2 * q;
            if (a >= 0 && b >= 0) out.push_back(Weight{a, b});
        }
    }
    return out;
}

namespace {

// Transition weight T(nu -> mu) of the operator for the three off-diagonal
// moves, as a plain integer.
long transition(const Weight& nu, const Weight& mu) {
    if (nu.a == mu.a + 2 && nu.b == mu.b - 1) return -3L * nu.a * (nu.a - 1);
    if (nu.a == mu.a - 1 && nu.b == mu.b + 2) return -3L * nu.b * (nu.b - 1);
    if (nu.a == mu.a + 1 && nu.b == mu.b + 1) return -9L * nu.a * nu.b;
    return 0;
}

}  // namespace

LabeledGegenbauer eigensolve(int m, int n, const SolveOptions& opts) {
    if (m < 0 || n < 0) throw std::invalid_argument("eigensolve: indices must be nonnegative");
    const Weight lambda{m, n};
    const std::vector<Weight> weights = support(lambda);

    struct Cmp {
        bool operator()(const Weight& x, const Weight& y) const {
            if (x.a != y.a) return x.a < y.a;
            return x.b < y.b;
        }
    };
    std::map<Weight, std::size_t, Cmp> index;
    for (std::size_t i = 0; i < weights.size(); ++i) index.emplace(weights[i], i);

    std::vector<KappaRational> coeff(weights.size());
    coeff[0] = KappaRational(1);

    const bool fixed = opts.kappa.has_value();
    const KappaRational eps_lambda = eigenvalue(m, n);
    const Rational eps_lambda_val = fixed ? eigenvalue_at(m, n, *opts.kappa) : Rational(0);

    for (std::size_t i = 1; i < weights.size(); ++i) {
        const Weight mu = weights[i];
        // Sources feeding mu: mu + (2,-1), mu + (-1,2), mu + (1,1); all lie
        // at strictly smaller position in the height enumeration.
        KappaRational s;
        const Weight sources[3] = {Weight{mu.a + 2, mu.b - 1}, Weight{mu.a - 1, mu.b + 2},
                                   Weight{mu.a + 1, mu.b + 1}};
        for (const Weight& nu : sources) {
            if (nu.a < 0 || nu.b < 0) continue;
            auto it = index.find(nu);
            if (it == index.end()) continue;
            const KappaRational& cnu = coeff[it->second];
            if (cnu.is_zero()) continue;
            s += cnu * KappaRational(transition(nu, mu));
        }
        if (s.is_zero()) continue;
        if (fixed) {
            const Rational d = eps_lambda_val - eigenvalue_at(mu.a, mu.b, *opts.kappa);
            if (d.is_zero()) throw PoleError(*opts.kappa);
            coeff[i] = s * KappaRational(Rational(1) / d);
        } else {
            const KappaRational d = eps_lambda - eigenvalue(mu.a, mu.b);
            // Generic coupling: the difference has kappa-coefficient
            // 3 * height(mu) > 0, so it is invertible in Q(kappa).
            if (d.num().degree() != 1 || d.num()[1].sign() <= 0)
                throw std::logic_error("eigensolve: degenerate eigenvalue difference");
            coeff[i] = s / d;
        }
    }

    LabeledGegenbauer out;
    out.m = m;
    out.n = n;
    out.method = Method::eigensolver;
    out.kappa = opts.kappa;
    for (std::size_t i = 0; i < weights.size(); ++i) out.poly.add_term(weights[i], coeff[i]);
    if (!out.poly.coefficient(lambda).is_one())
        throw std::logic_error("eigensolve: leading coefficient is not 1");
    return out;
}

}  // namespace ggp
