#include "ggp/serialize.hpp"

#include "json.hpp"

#include <stdexcept>
#include <utility>

namespace ggp {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json coeff_list(const UniPoly& p) {
    auto arr = ordered_json::array();
    if (p.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

UniPoly parse_coeff_list(const nlohmann::json& arr) {
    if (!arr.is_array() || arr.empty()) throw std::invalid_argument("coefficient list must be a nonempty array");
    std::vector<Rational> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_string()) throw std::invalid_argument("coefficient must be a string");
        auto r = Rational::parse(item.get<std::string>());
        if (!r) throw std::invalid_argument("malformed rational: " + item.get<std::string>());
        coeffs.push_back(*r);
    }
    return UniPoly(std::move(coeffs));
}

}  // namespace

std::string to_json(const LabeledGegenbauer& g) {
    ordered_json j;
    j["family"] = "A2";
    j["m"] = g.m;
    j["n"] = g.n;
    if (g.kappa) {
        j["kappa"] = ordered_json{{"kind", "rational"}, {"value", g.kappa->str()}};
    } else {
        j["kappa"] = ordered_json{{"kind", "symbolic"}};
    }
    j["method"] = method_name(g.method);
    auto terms = ordered_json::array();
    for (const auto& [w, c] : g.poly.terms()) {
        ordered_json t;
        t["e1"] = w.a;
        t["e2"] = w.b;
        t["num"] = coeff_list(c.num());
        t["den"] = coeff_list(c.den());
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

LabeledGegenbauer parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.is_object()) throw std::invalid_argument("top level must be an object");
        if (j.at("family").get<std::string>() != "A2")
            throw std::invalid_argument("unsupported family");
        LabeledGegenbauer g;
        g.m = j.at("m").get<int>();
        g.n = j.at("n").get<int>();
        if (g.m < 0 || g.n < 0) throw std::invalid_argument("indices must be nonnegative");
        const auto& k = j.at("kappa");
        const std::string kind = k.at("kind").get<std::string>();
        if (kind == "rational") {
            auto r = Rational::parse(k.at("value").get<std::string>());
            if (!r) throw std::invalid_argument("malformed kappa value");
            g.kappa = *r;
        } else if (kind != "symbolic") {
            throw std::invalid_argument("unknown kappa kind: " + kind);
        }
        auto method = method_from_name(j.at("method").get<std::string>());
        if (!method) throw std::invalid_argument("unknown method tag");
        g.method = *method;
        const auto& terms = j.at("terms");
        if (!terms.is_array()) throw std::invalid_argument("terms must be an array");
        for (const auto& t : terms) {
            const int e1 = t.at("e1").get<int>();
            const int e2 = t.at("e2").get<int>();
            if (e1 < 0 || e2 < 0) throw std::invalid_argument("exponents must be nonnegative");
            KappaRational c(parse_coeff_list(t.at("num")), parse_coeff_list(t.at("den")));
            g.poly.add_term(Weight{e1, e2}, c);
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid polynomial JSON: ") + e.what());
    }
}

std::string to_json(const VerificationReport& r) {
    ordered_json j;
    j["engine"] = r.engine;
    j["suite"] = r.suite;
    j["config"] = r.config;
    if (!r.note.empty()) j["note"] = r.note;
    j["summary"] = ordered_json{{"total", r.total}, {"passed", r.passed}, {"failed", r.failed}};
    auto results = ordered_json::array();
    for (const auto& c : r.results) {
        ordered_json item;
        item["check"] = c.check;
        item["indices"] = c.indices;
        item["status"] = c.pass ? "pass" : "fail";
        if (!c.residual.empty()) item["residual"] = c.residual;
        item["elapsed_ns"] = c.elapsed_ns;
        results.push_back(std::move(item));
    }
    j["results"] = std::move(results);
    return j.dump();
}

std::string to_text(const BiPoly& p) { return p.str(); }

namespace {

std::string latex_monomial(const Weight& w) {
    std::string s;
    if (w.a > 0) {
        s += "z_{1}";
        if (w.a > 1) s += "^{" + std::to_string(w.a) + "}";
    }
    if (w.b > 0) {
        s += "z_{2}";
        if (w.b > 1) s += "^{" + std::to_string(w.b) + "}";
    }
    return s;
}

// |c| in LaTeX, e.g. "3", "\frac{3}{2}", "\frac{3}{2\kappa+1}".
std::string latex_magnitude(const DisplayParts& parts, bool attached) {
    const std::string num = parts.num.str("\\kappa", true);
    if (parts.den.is_one()) {
        if (parts.num.degree() > 0 && attached) return "(" + num + ")";
        return num;
    }
    return "\\frac{" + num + "}{" + parts.den.str("\\kappa", true) + "}";
}

}  // namespace

std::string to_latex(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : p.terms()) {
        const DisplayParts parts = display_parts(c);
        if (out.empty()) {
            if (parts.sign < 0) out += "-";
        } else {
            out += parts.sign < 0 ? " - " : " + ";
        }
        const std::string mono = latex_monomial(w);
        const std::string mag = latex_magnitude(parts, !mono.empty());
        if (mono.empty()) {
            out += mag;
        } else if (mag == "1") {
            out += mono;
        } else {
            out += mag + mono;
        }
    }
    return out;
}

}  // namespace ggp
