#pragma once

#include "isingff/poly.hpp"
#include "isingff/rational.hpp"

#include <stdexcept>
#include <vector>

namespace isingff {

// Truncated power series in t: coefficients of t^(val), t^(val+1), ... and
// nothing known at or above t^order. The valuation is explicit so negative
// powers (Laurent tails produced by operator application) are first class.
class Series {
  public:
    Series() : val_(0), order_(0) {}
    Series(int val, std::vector<Rational> c, int order);

    static Series zero(int order) { return Series(order, {}, order); }
    static Series one(int order) { return monomial(0, Rational(1), order); }
    static Series monomial(int k, const Rational& v, int order) {
        return Series(k, {v}, order);
    }
    static Series from_poly(const Poly& p, int order) {
        return Series(0, p.coeffs(), order);
    }

    int valuation() const { return val_; }
    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;

    // coefficient of t^k; throws if k >= order (unknown territory)
    Rational at(int k) const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator-() const;
    Series operator*(const Series& o) const;
    Series operator*(const Rational& s) const;
    bool operator==(const Series& o) const {
        return val_ == o.val_ && order_ == o.order_ && c_ == o.c_;
    }

    Series shifted(int k) const;      // multiply by t^k (k may be negative)
    Series derivative() const;
    Series truncated(int order) const;
    Series div_poly(const Poly& p) const; // divide by p; t-powers factor as valuation shift
    Poly poly_through(int deg) const;     // exact coefficients 0..deg (throws beyond order)

  private:
    void normalize();
    int val_;
    std::vector<Rational> c_;
    int order_;
};

inline Series operator*(const Rational& s, const Series& x) { return x * s; }

} // namespace isingff
