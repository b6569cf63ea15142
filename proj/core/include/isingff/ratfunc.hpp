#pragma once

#include "isingff/poly.hpp"

namespace isingff {

// Rational function num/den over Q[t], reduced, den monic.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly::constant(Rational(1))) {}
    RatFunc(Poly num, Poly den);
    static RatFunc from_poly(Poly p) { return RatFunc(std::move(p), Poly::constant(Rational(1))); }
    static RatFunc constant(const Rational& v) { return from_poly(Poly::constant(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator*(const Rational& s) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc derivative() const;

  private:
    Poly num_, den_;
};

} // namespace isingff
