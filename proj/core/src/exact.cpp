#include "isingff/logseries.hpp"
#include "isingff/poly.hpp"
#include "isingff/ratfunc.hpp"
#include "isingff/series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace isingff {

// ---------------------------------------------------------------- Poly

Poly Poly::operator-() const {
    std::vector<Rational> r(c_);
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
    if (s == 0) return Poly();
    std::vector<Rational> r(c_);
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(r));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::shifted(int k) const {
    if (is_zero()) return Poly();
    std::vector<Rational> r(c_.size() + k);
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    std::vector<Rational> q(rem.size() > static_cast<size_t>(db)
                                ? rem.size() - db
                                : 0);
    while (static_cast<int>(rem.size()) - 1 >= db) {
        if (rem.back() == 0) {
            rem.pop_back();
            continue;
        }
        int d = static_cast<int>(rem.size()) - 1 - db;
        Rational f = rem.back() / b.c_.back();
        q[d] = f;
        for (int i = 0; i <= db; ++i) rem[d + i] -= f * b.c_[i];
        rem.pop_back();
    }
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

namespace {

// primitive integer image: p / content, as mpz coefficients
std::vector<mpz_class> primitive_z(const Poly& p, mpz_class* denom_lcm = nullptr) {
    mpz_class lcm(1);
    for (const auto& x : p.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> z;
    z.reserve(p.coeffs().size());
    mpz_class g(0);
    for (const auto& x : p.coeffs()) {
        mpz_class v = x.get_num() * (lcm / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        z.push_back(std::move(v));
    }
    if (g != 0)
        for (auto& v : z) v /= g;
    if (denom_lcm) *denom_lcm = lcm;
    return z;
}

void ztrim(std::vector<mpz_class>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void make_primitive(std::vector<mpz_class>& a) {
    mpz_class g(0);
    for (auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : a) v /= g;
}

// pseudo-remainder of primitive integer polynomials
std::vector<mpz_class> prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        if (a.back() == 0) {
            a.pop_back();
            continue;
        }
        int d = static_cast<int>(a.size()) - 1 - db;
        mpz_class la = a.back(), lb = b.back();
        for (auto& v : a) v *= lb;
        for (int i = 0; i <= db; ++i) a[d + i] -= la * b[i];
        ztrim(a);
        make_primitive(a);
    }
    return a;
}

} // namespace

Poly Poly::gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    auto za = primitive_z(a);
    auto zb = primitive_z(b);
    ztrim(za);
    ztrim(zb);
    if (za.size() < zb.size()) std::swap(za, zb);
    while (!zb.empty()) {
        auto r = prem(za, zb);
        za = std::move(zb);
        zb = std::move(r);
    }
    std::vector<Rational> c;
    c.reserve(za.size());
    Rational lead(za.back());
    for (auto& v : za) c.emplace_back(Rational(v) / lead);
    return Poly(std::move(c));
}

Rational Poly::content() const {
    if (is_zero()) return Rational(0);
    mpz_class g(0), l(1);
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    }
    return Rational(g, l);
}

Poly Poly::reflected(int d) const {
    std::vector<Rational> r(d + 1);
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) r[d - i] = c_[i];
    return Poly(std::move(r));
}

bool Poly::is_palindromic(int d) const {
    if (degree() > d) return false;
    for (int k = 0; k <= d; ++k)
        if (at(k) != at(d - k)) return false;
    return true;
}

// ---------------------------------------------------------------- Series

Series::Series(int val, std::vector<Rational> c, int order)
    : val_(val), c_(std::move(c)), order_(order) {
    normalize();
}

void Series::normalize() {
    if (val_ + static_cast<int>(c_.size()) > order_)
        c_.resize(order_ > val_ ? order_ - val_ : 0);
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + lead);
        val_ += static_cast<int>(lead);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) val_ = order_;
}

bool Series::is_zero() const { return c_.empty(); }

Rational Series::at(int k) const {
    if (k >= order_)
        throw std::out_of_range("series coefficient beyond truncation order");
    int i = k - val_;
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
}

Series Series::operator+(const Series& o) const {
    int order = std::min(order_, o.order_);
    int val = std::min(val_, o.val_);
    if (val >= order) return Series::zero(order);
    std::vector<Rational> c(order - val);
    for (size_t i = 0; i < c_.size(); ++i) {
        int k = val_ + static_cast<int>(i) - val;
        if (k < static_cast<int>(c.size())) c[k] += c_[i];
    }
    for (size_t i = 0; i < o.c_.size(); ++i) {
        int k = o.val_ + static_cast<int>(i) - val;
        if (k < static_cast<int>(c.size())) c[k] += o.c_[i];
    }
    return Series(val, std::move(c), order);
}

Series Series::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x = -x;
    return Series(val_, std::move(c), order_);
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
    int order = std::min(order_ + o.val_, o.order_ + val_);
    int val = val_ + o.val_;
    if (c_.empty() || o.c_.empty()) return Series::zero(order);
    int n = order - val;
    if (n <= 0) return Series::zero(order);
    std::vector<Rational> c(n);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        size_t jmax = std::min(o.c_.size(), static_cast<size_t>(n) - std::min(static_cast<size_t>(n), i));
        (void)jmax;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            size_t k = i + j;
            if (k >= static_cast<size_t>(n)) break;
            if (o.c_[j] == 0) continue;
            c[k] += c_[i] * o.c_[j];
        }
    }
    return Series(val, std::move(c), order);
}

Series Series::operator*(const Rational& s) const {
    if (s == 0) return Series::zero(order_);
    std::vector<Rational> c(c_);
    for (auto& x : c) x *= s;
    return Series(val_, std::move(c), order_);
}

Series Series::shifted(int k) const { return Series(val_ + k, c_, order_ + k); }

Series Series::derivative() const {
    std::vector<Rational> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] *= Rational(val_ + static_cast<long>(i));
    return Series(val_ - 1, std::move(c), order_ - 1);
}

Series Series::truncated(int order) const {
    if (order >= order_) return *this;
    std::vector<Rational> c(c_);
    return Series(val_, std::move(c), order);
}

Series Series::div_poly(const Poly& p) const {
    auto v = p.valuation();
    if (!v) throw std::domain_error("series division by zero polynomial");
    // p = t^v * unit; dividing by t^v is a valuation shift, the unit inverts
    std::vector<Rational> u(p.coeffs().begin() + *v, p.coeffs().end());
    int n = order_ - val_;
    if (n <= 0) return Series::zero(order_ - *v);
    std::vector<Rational> inv(n);
    inv[0] = Rational(1) / u[0];
    for (int k = 1; k < n; ++k) {
        Rational s(0);
        for (int j = 1; j <= k && j < static_cast<int>(u.size()); ++j) s += u[j] * inv[k - j];
        inv[k] = -s / u[0];
    }
    std::vector<Rational> c(n);
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j < n; ++j) {
            if (inv[j] == 0) continue;
            c[i + j] += c_[i] * inv[j];
        }
    }
    return Series(val_ - *v, std::move(c), order_ - *v);
}

Poly Series::poly_through(int deg) const {
    if (order_ <= deg)
        throw std::out_of_range("series truncation order too low for requested degree");
    if (val_ < 0 && !is_zero() && valuation() < 0)
        throw std::domain_error("series with negative valuation is not a polynomial");
    std::vector<Rational> c(deg + 1);
    for (int k = std::max(0, val_); k <= deg; ++k) c[k] = at(k);
    return Poly(std::move(c));
}

// ---------------------------------------------------------------- LogSeries

LogSeries::LogSeries(Series analytic, Series logpart) {
    ch_.push_back(std::move(analytic));
    ch_.push_back(std::move(logpart));
    squeeze();
}

LogSeries::LogSeries(std::vector<Series> channels) : ch_(std::move(channels)) {
    if (ch_.empty()) throw std::invalid_argument("log series needs at least one channel");
    squeeze();
}

void LogSeries::squeeze() {
    while (ch_.size() > 1 && ch_.back().is_zero()) ch_.pop_back();
}

Series LogSeries::channel(int k) const {
    if (k < static_cast<int>(ch_.size())) return ch_[k];
    return Series::zero(order());
}

int LogSeries::order() const {
    int o = ch_[0].order();
    for (const auto& s : ch_) o = std::min(o, s.order());
    return o;
}

bool LogSeries::is_zero() const {
    for (const auto& s : ch_)
        if (!s.is_zero()) return false;
    return true;
}

bool LogSeries::log_free() const {
    for (size_t k = 1; k < ch_.size(); ++k)
        if (!ch_[k].is_zero()) return false;
    return true;
}

LogSeries LogSeries::operator+(const LogSeries& o) const {
    size_t n = std::max(ch_.size(), o.ch_.size());
    int ord = std::min(order(), o.order());
    std::vector<Series> ch;
    ch.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        Series a = k < ch_.size() ? ch_[k] : Series::zero(ord);
        Series b = k < o.ch_.size() ? o.ch_[k] : Series::zero(ord);
        ch.push_back(a + b);
    }
    return LogSeries(std::move(ch));
}

LogSeries LogSeries::operator-() const {
    std::vector<Series> ch;
    ch.reserve(ch_.size());
    for (const auto& s : ch_) ch.push_back(-s);
    return LogSeries(std::move(ch));
}

LogSeries LogSeries::operator-(const LogSeries& o) const { return *this + (-o); }

LogSeries LogSeries::operator*(const LogSeries& o) const {
    size_t n = ch_.size() + o.ch_.size() - 1;
    int ord = std::numeric_limits<int>::max();
    for (const auto& a : ch_)
        for (const auto& b : o.ch_)
            ord = std::min(ord, std::min(a.order() + b.valuation(), b.order() + a.valuation()));
    std::vector<Series> ch(n, Series::zero(ord));
    for (size_t i = 0; i < ch_.size(); ++i)
        for (size_t j = 0; j < o.ch_.size(); ++j) ch[i + j] = ch[i + j] + ch_[i] * o.ch_[j];
    return LogSeries(std::move(ch));
}

LogSeries LogSeries::operator*(const Series& s) const {
    std::vector<Series> ch;
    ch.reserve(ch_.size());
    for (const auto& a : ch_) ch.push_back(a * s);
    return LogSeries(std::move(ch));
}

LogSeries LogSeries::operator*(const Rational& s) const {
    std::vector<Series> ch;
    ch.reserve(ch_.size());
    for (const auto& a : ch_) ch.push_back(a * s);
    return LogSeries(std::move(ch));
}

LogSeries LogSeries::shifted(int k) const {
    std::vector<Series> ch;
    ch.reserve(ch_.size());
    for (const auto& a : ch_) ch.push_back(a.shifted(k));
    return LogSeries(std::move(ch));
}

LogSeries LogSeries::derivative() const {
    std::vector<Series> ch(ch_.size(), Series::zero(order() - 1));
    for (size_t k = 0; k < ch_.size(); ++k) {
        Series d = ch_[k].derivative();
        if (k + 1 < ch_.size())
            d = d + ch_[k + 1].shifted(-1) * Rational(static_cast<long>(k + 1));
        ch[k] = d;
    }
    return LogSeries(std::move(ch));
}

LogSeries LogSeries::div_poly(const Poly& p) const {
    std::vector<Series> ch;
    ch.reserve(ch_.size());
    for (const auto& a : ch_) ch.push_back(a.div_poly(p));
    return LogSeries(std::move(ch));
}

LogSeries LogSeries::truncated(int order) const {
    std::vector<Series> ch;
    ch.reserve(ch_.size());
    for (const auto& a : ch_) ch.push_back(a.truncated(order));
    return LogSeries(std::move(ch));
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    Rational lead = den_.leading();
    num_ = num_ * (Rational(1) / lead);
    den_ = den_ * (Rational(1) / lead);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("rational function division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator*(const Rational& s) const { return RatFunc(num_ * s, den_); }

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

} // namespace isingff
