#include "isingff/fixtures.hpp"

#include "isingff/hyper.hpp"
#include "isingff/seq.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace isingff {

namespace {

[[noreturn]] void fail(int lineno, const std::string& msg) {
    throw std::runtime_error("fixtures line " + std::to_string(lineno) + ": " + msg);
}

// product of prime powers: 2^6*3*7
Rational parse_factor_product(const std::string& s, int lineno) {
    Rational r(1);
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '*')) {
        if (part.empty()) fail(lineno, "empty factor in " + s);
        auto caret = part.find('^');
        long base = 0, exp = 1;
        try {
            base = std::stol(part.substr(0, caret));
            if (caret != std::string::npos) exp = std::stol(part.substr(caret + 1));
        } catch (...) {
            fail(lineno, "bad integer in " + s);
        }
        Rational b(base);
        for (long i = 0; i < exp; ++i) r *= b;
    }
    return r;
}

Rational parse_prefactor(const std::string& s, int lineno) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return parse_factor_product(s, lineno);
    return parse_factor_product(s.substr(0, slash), lineno) /
           parse_factor_product(s.substr(slash + 1), lineno);
}

FixtureFactor parse_factor(const std::string& tok, int lineno) {
    FixtureFactor f;
    if (tok[0] == 't') {
        f.kind = FixtureFactor::Monomial;
        f.power = tok.size() > 1 ? std::stoi(tok.substr(2)) : 1;
        if (tok.size() > 1 && tok[1] != '^') fail(lineno, "bad monomial " + tok);
        f.value = Poly::monomial(f.power, Rational(1));
        return f;
    }
    if (tok[0] == '(') {
        f.kind = FixtureFactor::OnePlusT;
        auto close = tok.find(')');
        std::string inner = tok.substr(1, close - 1);
        if (inner == "t+1")
            f.t_first = true;
        else if (inner == "1+t")
            f.t_first = false;
        else
            fail(lineno, "unsupported factor " + tok);
        f.power = (close + 1 < tok.size() && tok[close + 1] == '^')
                      ? std::stoi(tok.substr(close + 2))
                      : 1;
        f.value = Poly::constant(Rational(1));
        Poly onept({Rational(1), Rational(1)});
        for (int i = 0; i < f.power; ++i) f.value = f.value * onept;
        return f;
    }
    if (tok[0] == '{') {
        if (tok.back() != '}') fail(lineno, "unterminated core " + tok);
        f.kind = FixtureFactor::Core;
        std::stringstream ss(tok.substr(1, tok.size() - 2));
        std::string part;
        while (std::getline(ss, part, ',')) f.spellings.push_back(part);
        std::vector<Rational> asc;
        for (auto it = f.spellings.rbegin(); it != f.spellings.rend(); ++it) {
            Rational v = parse_factor_product(*it, lineno);
            if (!is_integer(v)) fail(lineno, "core coefficients must be integers");
            asc.push_back(v);
        }
        f.value = Poly(std::move(asc));
        return f;
    }
    fail(lineno, "unrecognized factor " + tok);
}

} // namespace

Rational FixtureTable::k_value(int m) const {
    auto it = K.find(m);
    if (it == K.end()) return Rational(0);
    return Rational(it->second.sign) * it->second.prefactor;
}

Poly FixtureTable::c_value(int m) const {
    auto it = C.find(m);
    if (it == C.end()) return Poly();
    return it->second.value;
}

std::vector<FixtureTable> parse_fixtures(const std::string& text) {
    std::vector<FixtureTable> tables;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    FixtureTable cur;
    bool open = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        if (word == "table") {
            if (open) fail(lineno, "nested table");
            cur = FixtureTable{};
            if (!(ls >> cur.n >> cur.N)) fail(lineno, "table needs n and N");
            open = true;
        } else if (word == "end") {
            if (!open) fail(lineno, "end without table");
            validate_fixture(cur);
            tables.push_back(std::move(cur));
            open = false;
        } else if (word == "K" || word == "C") {
            if (!open) fail(lineno, "entry outside table");
            FixtureEntry e;
            std::string sign, pref;
            if (!(ls >> e.m >> sign >> pref)) fail(lineno, "entry needs m, sign, prefactor");
            if (sign != "+" && sign != "-") fail(lineno, "sign must be + or -");
            e.sign = (sign == "+") ? 1 : -1;
            e.prefactor_spelling = pref;
            e.prefactor = parse_prefactor(pref, lineno);
            Poly value = Poly::constant(e.prefactor * e.sign);
            std::string tok;
            while (ls >> tok) {
                FixtureFactor f = parse_factor(tok, lineno);
                value = value * f.value;
                e.factors.push_back(std::move(f));
            }
            e.value = value;
            auto& dst = (word == "K") ? cur.K : cur.C;
            if (!dst.emplace(e.m, std::move(e)).second) fail(lineno, "duplicate entry");
        } else {
            fail(lineno, "unrecognized directive " + word);
        }
    }
    if (open) fail(lineno, "unterminated table");
    return tables;
}

const std::vector<FixtureTable>& fixtures() {
    static const std::vector<FixtureTable> tables = parse_fixtures(fixtures_text());
    return tables;
}

const FixtureTable* find_fixture(int n, int N) {
    for (const auto& t : fixtures())
        if (t.n == n && t.N == N) return &t;
    return nullptr;
}

Series fixture_series(const FixtureTable& t, int order) {
    Series FN = F_series(t.N, order);
    Series FN1 = F_series(t.N + 1, order);
    Series total = Series::zero(order);
    for (const auto& [m, e] : t.K) {
        Rational coeff = t.k_value(m);
        Series lower;
        if (t.n % 2 == 0) {
            if (m == 0)
                lower = Series::one(order);
            else {
                const FixtureTable* lt = find_fixture(2 * m, t.N);
                if (!lt) throw std::runtime_error("missing lower-order fixture");
                lower = fixture_series(*lt, order);
            }
        } else {
            if (m == 0)
                lower = F_series(t.N, order) * lambda_coeff(t.N);
            else {
                const FixtureTable* lt = find_fixture(2 * m + 1, t.N);
                if (!lt) throw std::runtime_error("missing lower-order fixture");
                lower = fixture_series(*lt, order);
            }
        }
        total = total + lower * coeff;
    }
    for (const auto& [m, e] : t.C) {
        Series w = Series::one(order);
        for (int i = 0; i < t.n - m; ++i) w = w * FN;
        for (int i = 0; i < m; ++i) w = w * FN1;
        total = total + Series::from_poly(e.value, order) * w;
    }
    return total;
}

void validate_fixture(const FixtureTable& t) {
    for (const auto& [m, e] : t.C) {
        if (m < 0 || m > t.n)
            throw std::runtime_error("fixture entry index out of range");
        auto val = e.value.valuation();
        if (!val) throw std::runtime_error("zero fixture entry");
        // stripped core must be a palindrome
        Poly core = Poly(std::vector<Rational>(e.value.coeffs().begin() + *val,
                                               e.value.coeffs().end()));
        if (!core.is_palindromic(core.degree()))
            throw std::runtime_error("fixture core is not palindromic (n=" + std::to_string(t.n) +
                                     " N=" + std::to_string(t.N) + " m=" + std::to_string(m) + ")");
        if (t.N >= 1) {
            // degree law: deg C = n(2N+1) when n is even, ((n-1)/2)(2(2N+1))... the
            // quadratic-family law: deg = floor(n/2)(2N+1) scaled for odd via pairs
            int expected = (t.n % 2 == 0) ? (t.n / 2) * (2 * t.N + 1)
                                          : ((t.n - 1) / 2) * (2 * t.N + 1);
            if (e.value.degree() != expected)
                throw std::runtime_error("fixture degree law violated (n=" + std::to_string(t.n) +
                                         " N=" + std::to_string(t.N) + " m=" + std::to_string(m) +
                                         ")");
            if (*val != m)
                throw std::runtime_error("fixture valuation law violated");
        }
    }
}

} // namespace isingff
