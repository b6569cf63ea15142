#include "isingff/latex.hpp"

#include <sstream>
#include <stdexcept>

namespace isingff {

namespace {

std::string spelling_to_latex(const std::string& s) {
    // 2^6*3*7 -> 2^{6}\cdot 3\cdot 7
    std::string out;
    std::stringstream ss(s);
    std::string part;
    bool first = true;
    while (std::getline(ss, part, '*')) {
        if (!first) out += "\\cdot ";
        first = false;
        auto caret = part.find('^');
        if (caret == std::string::npos)
            out += part;
        else
            out += part.substr(0, caret) + "^{" + part.substr(caret + 1) + "}";
    }
    return out;
}

std::string prefactor_to_latex(const std::string& spelling) {
    auto slash = spelling.find('/');
    if (slash == std::string::npos) return spelling_to_latex(spelling);
    return "\\frac{" + spelling_to_latex(spelling.substr(0, slash)) + "}{" +
           spelling_to_latex(spelling.substr(slash + 1)) + "}";
}

std::string core_to_latex(const std::vector<std::string>& spellings) {
    std::string out = "(";
    int deg = static_cast<int>(spellings.size()) - 1;
    for (int i = 0; i <= deg; ++i) {
        int p = deg - i;
        if (i > 0) out += "+";
        if (!(spellings[i] == "1" && p > 0)) out += spelling_to_latex(spellings[i]);
        if (p == 1)
            out += "t";
        else if (p > 1)
            out += "t^{" + std::to_string(p) + "}";
    }
    return out + ")";
}

std::string factor_to_latex(const FixtureFactor& f) {
    switch (f.kind) {
        case FixtureFactor::Monomial:
            return f.power == 1 ? "t" : "t^{" + std::to_string(f.power) + "}";
        case FixtureFactor::OnePlusT: {
            std::string base = f.t_first ? "(t+1)" : "(1+t)";
            return f.power == 1 ? base : base + "^{" + std::to_string(f.power) + "}";
        }
        case FixtureFactor::Core: return core_to_latex(f.spellings);
    }
    return "";
}

std::string f_monomial(int n, int N, int m) {
    std::string out;
    if (m < n) {
        out += "F_{" + std::to_string(N) + "}";
        if (n - m > 1) out += "^{" + std::to_string(n - m) + "}";
    }
    if (m > 0) {
        out += "F_{" + std::to_string(N + 1) + "}";
        if (m > 1) out += "^{" + std::to_string(m) + "}";
    }
    return out;
}

std::string lower_term(int n, int N, int m) {
    if (n % 2 == 0)
        return m == 0 ? "" : "f^{(" + std::to_string(2 * m) + ")}_{" + std::to_string(N) + "," +
                                 std::to_string(N) + "}";
    std::string base = "f^{(" + std::to_string(2 * m + 1) + ")}_{" + std::to_string(N) + "," +
                       std::to_string(N) + "}";
    if (N == 0) return base;
    return base + "/t^{" +
           (N % 2 == 0 ? std::to_string(N / 2) : std::to_string(N) + "/2") + "}";
}

std::string head(int n, int N) {
    std::string f = "f^{(" + std::to_string(n) + ")}_{" + std::to_string(N) + "," +
                    std::to_string(N) + "}";
    if (n % 2 == 0 || N == 0) return f + " = ";
    if (N % 2 == 0) return f + "/t^{" + std::to_string(N / 2) + "} = ";
    return f + "/t^{" + std::to_string(N) + "/2} = ";
}

std::string entry_to_latex(const FixtureEntry& e, const std::string& tail) {
    std::string out = e.sign < 0 ? "-" : "+";
    out += prefactor_to_latex(e.prefactor_spelling);
    for (const auto& f : e.factors) {
        if (f.kind == FixtureFactor::Core && f.value.degree() == 0 && f.value.at(0) == 1)
            continue; // trivial core, not printed
        out += "\\," + factor_to_latex(f);
    }
    if (!tail.empty()) out += "\\," + tail;
    return out;
}

// canonical factorization of a constructed polynomial: content * t^m * (t+1)^k * core
FixtureEntry canonical_entry(int m, const Poly& p) {
    FixtureEntry e;
    e.m = m;
    if (p.is_zero()) throw std::invalid_argument("cannot render zero entry");
    auto val = p.valuation();
    Poly core(std::vector<Rational>(p.coeffs().begin() + *val, p.coeffs().end()));
    int onept = 0;
    Poly onept_poly({Rational(1), Rational(1)});
    for (;;) {
        auto [q, r] = Poly::divmod(core, onept_poly);
        if (!r.is_zero() || q.is_zero()) break;
        core = q;
        ++onept;
    }
    Rational content = core.content();
    if (core.leading() < 0) content = -content;
    core = core * (Rational(1) / content);
    e.sign = content < 0 ? -1 : 1;
    Rational amp = content < 0 ? Rational(-content) : content;
    e.prefactor = amp;
    e.prefactor_spelling = to_string(amp);
    auto slash = e.prefactor_spelling.find('/');
    (void)slash;
    if (*val > 0) {
        FixtureFactor f;
        f.kind = FixtureFactor::Monomial;
        f.power = *val;
        f.value = Poly::monomial(*val, Rational(1));
        e.factors.push_back(f);
    }
    if (onept > 0) {
        FixtureFactor f;
        f.kind = FixtureFactor::OnePlusT;
        f.power = onept;
        e.factors.push_back(f);
    }
    if (!(core.degree() == 0 && core.at(0) == 1)) {
        FixtureFactor f;
        f.kind = FixtureFactor::Core;
        for (int k = core.degree(); k >= 0; --k) f.spellings.push_back(to_string(core.at(k)));
        f.value = core;
        e.factors.push_back(f);
    }
    e.value = p;
    return e;
}

} // namespace

std::vector<std::string> latex_fixture(const FixtureTable& t) {
    std::vector<std::string> lines;
    lines.push_back(head(t.n, t.N));
    for (const auto& [m, e] : t.K) lines.push_back(entry_to_latex(e, lower_term(t.n, t.N, m)));
    for (const auto& [m, e] : t.C) lines.push_back(entry_to_latex(e, f_monomial(t.n, t.N, m)));
    return lines;
}

std::vector<std::string> latex_table(const FormFactorExpr& f) {
    const FixtureTable* ref = find_fixture(f.n, f.N);
    if (ref) {
        // only render the reference factorization if it matches what we built
        bool same = true;
        for (size_t m = 0; m < f.K.size() && same; ++m)
            if (ref->k_value(static_cast<int>(m)) != f.K[m]) same = false;
        for (size_t m = 0; m < f.C.size() && same; ++m)
            if (!(ref->c_value(static_cast<int>(m)) == f.C[m].poly)) same = false;
        if (same) return latex_fixture(*ref);
    }
    FixtureTable t;
    t.n = f.n;
    t.N = f.N;
    for (size_t m = 0; m < f.K.size(); ++m) {
        if (f.K[m] == 0) continue;
        FixtureEntry e;
        e.m = static_cast<int>(m);
        e.sign = f.K[m] < 0 ? -1 : 1;
        Rational a = f.K[m] < 0 ? Rational(-f.K[m]) : f.K[m];
        e.prefactor = a;
        e.prefactor_spelling = to_string(a);
        t.K.emplace(static_cast<int>(m), std::move(e));
    }
    for (size_t m = 0; m < f.C.size(); ++m) {
        if (f.C[m].poly.is_zero()) continue;
        t.C.emplace(static_cast<int>(m), canonical_entry(static_cast<int>(m), f.C[m].poly));
    }
    return latex_fixture(t);
}

std::vector<std::string> text_table(const FormFactorExpr& f) {
    std::vector<std::string> lines;
    std::string headline = "f(" + std::to_string(f.n) + ")[N=" + std::to_string(f.N) + "]";
    if (f.odd()) headline += " / t^(N/2)";
    lines.push_back(headline + " =");
    for (size_t m = 0; m < f.K.size(); ++m) {
        if (f.K[m] == 0) continue;
        std::string low = f.odd() ? "f(" + std::to_string(2 * m + 1) + ")/t^(N/2)"
                                  : (m == 0 ? "1" : "f(" + std::to_string(2 * m) + ")");
        bool neg = f.K[m] < 0;
        Rational mag = neg ? Rational(0) - f.K[m] : f.K[m];
        lines.push_back(std::string("  ") + (neg ? "- " : "+ ") + to_string(mag) + " * " + low);
    }
    for (size_t m = 0; m < f.C.size(); ++m) {
        if (f.C[m].poly.is_zero()) continue;
        std::ostringstream os;
        os << "  + [";
        const auto& c = f.C[m].poly.coeffs();
        for (size_t k = 0; k < c.size(); ++k) {
            if (k) os << ", ";
            os << to_string(c[k]);
        }
        os << "] * F_" << f.N << "^" << (f.C.size() - 1 - m) << " F_" << (f.N + 1) << "^" << m;
        lines.push_back(os.str());
    }
    return lines;
}

} // namespace isingff
