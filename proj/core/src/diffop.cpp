#include "isingff/diffop.hpp"

#include <map>
#include <stdexcept>

namespace isingff {

DiffOp DiffOp::from_polys(const std::vector<Poly>& polys) {
    std::vector<RatFunc> c;
    c.reserve(polys.size());
    for (const auto& p : polys) c.push_back(RatFunc::from_poly(p));
    return DiffOp(std::move(c));
}

DiffOp DiffOp::derivative() {
    return DiffOp({RatFunc(), RatFunc::constant(Rational(1))});
}

LogSeries DiffOp::apply(const LogSeries& x) const {
    LogSeries out = LogSeries::zero(x.order());
    LogSeries d = x;
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        if (k > 0) d = d.derivative();
        if (c_[k].is_zero()) continue;
        LogSeries term = d;
        if (!(c_[k].num().degree() == 0 && c_[k].num().at(0) == 1))
            term = term * Series::from_poly(c_[k].num(), d.order() + c_[k].num().degree() + 1);
        if (c_[k].den().degree() > 0 || c_[k].den().at(0) != 1)
            term = term.div_poly(c_[k].den());
        out = out + term;
    }
    return out;
}

Series DiffOp::apply(const Series& x) const {
    LogSeries r = apply(LogSeries(x));
    if (!r.log_free()) throw std::logic_error("operator application produced log channels");
    return r.analytic();
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    std::vector<RatFunc> c(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size()) c[i] = c[i] + c_[i];
        if (i < o.c_.size()) c[i] = c[i] + o.c_[i];
    }
    return DiffOp(std::move(c));
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::operator-() const {
    std::vector<RatFunc> c(c_);
    for (auto& r : c) r = -r;
    return DiffOp(std::move(c));
}

DiffOp DiffOp::operator*(const DiffOp& o) const {
    // D^k (r .) = sum_i C(k,i) r^(i) D^(k-i)
    std::map<int, RatFunc> acc;
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        if (c_[k].is_zero()) continue;
        for (int l = 0; l < static_cast<int>(o.c_.size()); ++l) {
            if (o.c_[l].is_zero()) continue;
            RatFunc r = o.c_[l];
            Rational binom(1);
            for (int i = 0; i <= k; ++i) {
                RatFunc term = c_[k] * r * binom;
                auto [it, fresh] = acc.emplace(k - i + l, term);
                if (!fresh) it->second = it->second + term;
                if (i < k) {
                    r = r.derivative();
                    binom = binom * Rational(k - i) / Rational(i + 1);
                }
            }
        }
    }
    int top = acc.empty() ? 0 : acc.rbegin()->first;
    std::vector<RatFunc> c(top + 1);
    for (auto& [k, v] : acc) c[k] = v;
    return DiffOp(std::move(c));
}

DiffOp DiffOp::scaled(const RatFunc& r) const {
    std::vector<RatFunc> c(c_);
    for (auto& x : c) x = x * r;
    return DiffOp(std::move(c));
}

DiffOp DiffOp::conjugated_by_power(const Rational& sigma) const {
    // base = D + sigma/t
    DiffOp base({RatFunc(Poly::constant(sigma), Poly::monomial(1, Rational(1))),
                 RatFunc::constant(Rational(1))});
    DiffOp out;
    DiffOp pw = DiffOp::identity();
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        if (k > 0) pw = base * pw;
        if (c_[k].is_zero()) continue;
        out = out + pw.scaled(c_[k]);
    }
    return out;
}

namespace {

RatFunc reciprocal_substitute(const RatFunc& r) {
    // r(1/t) as a rational function of t
    int dn = r.num().degree(), dd = r.den().degree();
    Poly num = r.num().reflected(dn);
    Poly den = r.den().reflected(dd);
    if (dd > dn)
        num = num.shifted(dd - dn);
    else if (dn > dd)
        den = den.shifted(dn - dd);
    return RatFunc(std::move(num), std::move(den));
}

} // namespace

DiffOp DiffOp::conjugated_by_reciprocal(int d) const {
    DiffOp base({RatFunc::from_poly(Poly::monomial(1, Rational(d))),
                 RatFunc::from_poly(Poly::monomial(2, Rational(-1)))});
    DiffOp out;
    DiffOp pw = DiffOp::identity();
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        if (k > 0) pw = base * pw;
        if (c_[k].is_zero()) continue;
        out = out + pw.scaled(reciprocal_substitute(c_[k]));
    }
    return out;
}

std::vector<Poly> DiffOp::cleared() const {
    Poly den = Poly::constant(Rational(1));
    for (const auto& r : c_) {
        Poly g = Poly::gcd(den, r.den());
        den = den * Poly::divmod(r.den(), g).first;
    }
    std::vector<Poly> polys;
    polys.reserve(c_.size());
    for (const auto& r : c_) {
        auto [q, rem] = Poly::divmod(den, r.den());
        if (!rem.is_zero()) throw std::logic_error("denominator lcm failure");
        polys.push_back(r.num() * q);
    }
    Rational content(0);
    {
        mpz_class g(0), l(1);
        for (const auto& p : polys)
            for (const auto& x : p.coeffs()) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
            }
        if (g == 0) return polys;
        content = Rational(g, l);
    }
    Rational scale = Rational(1) / content;
    if (!polys.empty() && !polys.back().is_zero() && polys.back().leading() < 0) scale = -scale;
    for (auto& p : polys) p = p * scale;
    return polys;
}

bool DiffOp::same_normalized(const DiffOp& a, const DiffOp& b) {
    return a.cleared() == b.cleared();
}

Poly DiffOp::indicial_polynomial() const {
    auto polys = cleared();
    int m = 0;
    bool first = true;
    for (int k = 0; k < static_cast<int>(polys.size()); ++k) {
        auto v = polys[k].valuation();
        if (!v) continue;
        if (first || *v - k < m) m = *v - k;
        first = false;
    }
    if (first) return Poly();
    // chi(s) = sum over k with val_k - k == m of lead_k * s(s-1)...(s-k+1)
    Poly chi;
    for (int k = 0; k < static_cast<int>(polys.size()); ++k) {
        auto v = polys[k].valuation();
        if (!v || *v - k != m) continue;
        Poly falling = Poly::constant(polys[k].at(*v));
        for (int i = 0; i < k; ++i)
            falling = falling * Poly({Rational(-i), Rational(1)});
        chi = chi + falling;
    }
    return chi;
}

std::pair<DiffOp, DiffOp> DiffOp::right_divide(const DiffOp& a, const DiffOp& b) {
    if (b.is_zero()) throw std::domain_error("operator division by zero");
    DiffOp rem = a;
    std::map<int, RatFunc> g;
    while (!rem.is_zero() && rem.order() >= b.order()) {
        int k = rem.order() - b.order();
        RatFunc f = rem.coeffs().back() / b.coeffs().back();
        std::vector<RatFunc> mono(k + 1);
        mono[k] = f;
        DiffOp m{std::move(mono)};
        auto [it, fresh] = g.emplace(k, f);
        if (!fresh) it->second = it->second + f;
        rem = rem - m * b;
        if (rem.order() >= k + b.order()) throw std::logic_error("division failed to reduce order");
    }
    int top = g.empty() ? 0 : g.rbegin()->first;
    std::vector<RatFunc> qc(top + 1);
    for (auto& [k, v] : g) qc[k] = v;
    return {DiffOp(std::move(qc)), rem};
}

} // namespace isingff
