#pragma once

#include "isingff/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace isingff {

// Dense univariate polynomial over Q; c[k] is the coefficient of t^k.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    static Poly constant(const Rational& v) { return Poly({v}); }
    static Poly monomial(int k, const Rational& v) {
        std::vector<Rational> c(k + 1);
        c[k] = v;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational at(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }
    // lowest nonzero power, or nullopt for the zero polynomial
    std::optional<int> valuation() const {
        for (int i = 0; i < static_cast<int>(c_.size()); ++i)
            if (c_[i] != 0) return i;
        return std::nullopt;
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const;
    Rational eval(const Rational& x) const;
    Poly shifted(int k) const; // multiply by t^k (k >= 0)

    // quotient/remainder over Q; divisor must be nonzero
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    // monic gcd over Q (primitive PRS underneath)
    static Poly gcd(Poly a, Poly b);

    // gcd of coefficients (positive), 0 for the zero polynomial
    Rational content() const;
    // t^d * p(1/t); requires degree() <= d
    Poly reflected(int d) const;
    bool is_palindromic(int d) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

} // namespace isingff
