#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace isingff {

// Exact rational scalar on top of GMP. The wrapper exists to guarantee the
// canonical form (reduced, positive denominator) on every construction path;
// raw mpq_class leaves num/den construction uncanonicalized.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
    Rational(long n) : v_(n) {}                // NOLINT
    Rational(const mpz_class& n) : v_(n) {}    // NOLINT
    Rational(long num, long den) : v_(num, den) { canonical(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { canonical(); }
    explicit Rational(const mpq_class& q) : v_(q) { canonical(); }

    const mpz_class& get_num() const { return v_.get_num(); }
    const mpz_class& get_den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(Canonical{}, a.v_ + b.v_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(Canonical{}, a.v_ - b.v_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(Canonical{}, a.v_ * b.v_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_ == 0) throw std::domain_error("rational division by zero");
        return Rational(Canonical{}, a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(Canonical{}, -v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

  private:
    struct Canonical {};
    Rational(Canonical, mpq_class q) : v_(std::move(q)) {} // arithmetic keeps the form
    void canonical() {
        if (v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    mpq_class v_;
};

inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() <= 0) throw std::invalid_argument("non-positive denominator: " + s);
    q.canonicalize();
    return Rational(q);
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw std::domain_error("rational does not fit a long: " + to_string(r));
    return r.get_num().get_si();
}

} // namespace isingff
