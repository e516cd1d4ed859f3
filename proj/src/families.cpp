#include "ggp/families.hpp"

#include <stdexcept>

namespace ggp {

namespace {

// c0 + c1 * kappa as a field element.
KappaRational lin(long c0, long c1) {
    return KappaRational(UniPoly::linear(Rational(c0), Rational(c1)));
}

// Evaluates a coefficient at a fixed coupling when one is set (the
// recurrences below run entirely over constants in that mode).
KappaRational at(const KappaRational& c, const SolveOptions& opts) {
    if (!opts.kappa) return c;
    return KappaRational(c.eval(*opts.kappa));
}

}  // namespace

KappaRational coeff_A(int m, int n) {
    if (m < 2 || n < 1) return KappaRational();
    const UniPoly num = UniPoly(Rational(static_cast<long>(m) * (m - 1) * n)) *
                        UniPoly::linear(Rational(m + n - 1), 1) * UniPoly::linear(Rational(m + n), 1);
    const UniPoly den = UniPoly::linear(Rational(m - 1), 1) * UniPoly::linear(Rational(m), 1) *
                        UniPoly::linear(Rational(m + n - 1), 2) * UniPoly::linear(Rational(m + n), 2);
    return KappaRational(num, den);
}

KappaRational coeff_B(int m, int n) {
    if (n < 2) return KappaRational();
    const UniPoly num = UniPoly(Rational(-static_cast<long>(n) * (n - 1))) *
                        UniPoly::linear(Rational(m + n), 1);
    const UniPoly den = UniPoly::linear(Rational(n - 1), 1) * UniPoly::linear(Rational(n), 1);
    return KappaRational(num, den);
}

KappaRational coeff_a_tilde(int m, int n) {
    if (m < 1 || n < 0) return KappaRational();
    const UniPoly num = UniPoly(Rational(m)) * UniPoly::linear(Rational(n + m), 1) *
                        UniPoly::linear(Rational(m - 1), 2) * UniPoly::linear(Rational(n + m - 1), 3);
    const UniPoly den = UniPoly::linear(Rational(m), 1) * UniPoly::linear(Rational(m - 1), 1) *
                        UniPoly::linear(Rational(n + m), 2) * UniPoly::linear(Rational(n + m - 1), 2);
    return KappaRational(num, den);
}

KappaRational coeff_c(int n) {
    if (n < 1) return KappaRational();
    const UniPoly num = UniPoly(Rational(n)) * UniPoly::linear(Rational(n - 1), 2);
    const UniPoly den = UniPoly::linear(Rational(n), 1) * UniPoly::linear(Rational(n - 1), 1);
    return KappaRational(num, den);
}

std::vector<LabeledGegenbauer> jack_row(int max_m, const SolveOptions& opts) {
    if (max_m < 0) throw std::invalid_argument("jack_row: negative bound");
    std::vector<BiPoly> f;
    f.reserve(static_cast<std::size_t>(max_m) + 1);
    f.push_back(BiPoly::constant(KappaRational(1)));
    const BiPoly z1 = BiPoly::z1();
    const BiPoly z2 = BiPoly::z2();
    for (int m = 1; m <= max_m; ++m) {
        BiPoly p = z1 * f[static_cast<std::size_t>(m - 1)];
        p.scale(at(lin(m - 1, 1), opts));
        if (m >= 2) {
            BiPoly q = z2 * f[static_cast<std::size_t>(m - 2)];
            q.scale(at(lin(m - 2, 2), opts));
            p -= q;
        }
        if (m >= 3) p += f[static_cast<std::size_t>(m - 3)] * at(lin(m - 3, 3), opts);
        p.scale(KappaRational(Rational(1, m)));
        f.push_back(std::move(p));
    }

    std::vector<LabeledGegenbauer> out;
    out.reserve(f.size());
    Rational factorial(1);
    for (int m = 0; m <= max_m; ++m) {
        if (m > 0) factorial *= Rational(m);
        KappaRational scale;
        if (opts.kappa) {
            const Rational pm = pochhammer(m).eval(*opts.kappa);
            if (pm.is_zero()) throw PoleError(*opts.kappa);
            scale = KappaRational(factorial / pm);
        } else {
            scale = KappaRational(factorial) / pochhammer(m);
        }
        LabeledGegenbauer g;
        g.m = m;
        g.n = 0;
        g.method = Method::genfunc;
        g.kappa = opts.kappa;
        g.poly = f[static_cast<std::size_t>(m)] * scale;
        out.push_back(std::move(g));
    }
    return out;
}

LabeledGegenbauer build_by_recurrence(int m, int n, Direction dir, const SolveOptions& opts) {
    if (m < 0 || n < 0) throw std::invalid_argument("build_by_recurrence: indices must be nonnegative");

    // Boundary row P_{i,0} for 0 <= i <= m+n; the lower_m ladder walks the
    // swapped column P_{0,j} instead.
    std::vector<LabeledGegenbauer> boundary = jack_row(m + n, opts);
    std::vector<BiPoly> prev;
    prev.reserve(boundary.size());
    for (auto& g : boundary)
        prev.push_back(dir == Direction::lower_n ? std::move(g.poly) : g.poly.swapped());

    const BiPoly step_var = dir == Direction::lower_n ? BiPoly::z2() : BiPoly::z1();
    const int steps = dir == Direction::lower_n ? n : m;
    const int other = dir == Direction::lower_n ? m : n;

    std::vector<BiPoly> two_back;
    for (int j = 1; j <= steps; ++j) {
        // After this pass, cur[i] is P_{i,j} (lower_n) resp. P_{j,i} (lower_m).
        const int width = other + (steps - j) + 1;
        std::vector<BiPoly> cur;
        cur.reserve(static_cast<std::size_t>(width));
        for (int i = 0; i < width; ++i) {
            BiPoly p = step_var * prev[static_cast<std::size_t>(i)];
            if (i >= 1) {
                // Both ladders share the same middle coefficient: a~ takes the
                // running index first and the step count minus one second.
                BiPoly q = prev[static_cast<std::size_t>(i - 1)] * at(coeff_a_tilde(i, j - 1), opts);
                p -= q;
            }
            if (j >= 2) {
                BiPoly q = two_back[static_cast<std::size_t>(i + 1)] * at(coeff_c(j - 1), opts);
                p -= q;
            }
            cur.push_back(std::move(p));
        }
        two_back = std::move(prev);
        prev = std::move(cur);
    }

    LabeledGegenbauer out;
    out.m = m;
    out.n = n;
    out.method = dir == Direction::lower_n ? Method::recurrence : Method::twin_recurrence;
    out.kappa = opts.kappa;
    out.poly = std::move(prev[static_cast<std::size_t>(other)]);
    return out;
}

std::vector<BiPoly> a1_row(int max_m) {
    if (max_m < 0) throw std::invalid_argument("a1_row: negative bound");
    std::vector<BiPoly> f;
    f.reserve(static_cast<std::size_t>(max_m) + 1);
    f.push_back(BiPoly::constant(KappaRational(1)));
    const BiPoly z = BiPoly::z1();
    for (int m = 1; m <= max_m; ++m) {
        BiPoly p = z * f[static_cast<std::size_t>(m - 1)];
        p.scale(lin(m - 1, 1));
        if (m >= 2) p -= f[static_cast<std::size_t>(m - 2)] * lin(m - 2, 2);
        p.scale(KappaRational(Rational(1, m)));
        f.push_back(std::move(p));
    }
    std::vector<BiPoly> out;
    out.reserve(f.size());
    Rational factorial(1);
    for (int m = 0; m <= max_m; ++m) {
        if (m > 0) factorial *= Rational(m);
        out.push_back(f[static_cast<std::size_t>(m)] * (KappaRational(factorial) / pochhammer(m)));
    }
    return out;
}

}  // namespace ggp
