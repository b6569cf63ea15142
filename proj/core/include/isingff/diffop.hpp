#pragma once

#include "isingff/logseries.hpp"
#include "isingff/ratfunc.hpp"

#include <vector>

namespace isingff {

// Linear differential operator sum_k r_k(t) D^k with rational-function
// coefficients; c[k] multiplies the k-th derivative.
class DiffOp {
  public:
    DiffOp() = default;
    explicit DiffOp(std::vector<RatFunc> c) : c_(std::move(c)) { trim(); }
    static DiffOp from_polys(const std::vector<Poly>& polys);
    static DiffOp identity() { return DiffOp({RatFunc::constant(Rational(1))}); }
    static DiffOp derivative(); // D
    static DiffOp mul_by(const Poly& p) { return DiffOp({RatFunc::from_poly(p)}); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    RatFunc coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : RatFunc();
    }

    LogSeries apply(const LogSeries& x) const;
    Series apply(const Series& x) const; // convenience for log-free input

    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp operator-() const;
    // (a * b)(f) = a(b(f))
    DiffOp operator*(const DiffOp& o) const;
    DiffOp scaled(const RatFunc& r) const;

    // t^(-sigma) L t^sigma: D -> D + sigma/t, exact for any rational sigma
    DiffOp conjugated_by_power(const Rational& sigma) const;
    // sigma_d L sigma_d with (sigma_d f)(t) = t^d f(1/t): the reciprocal
    // substitution; r(t) -> r(1/t), D -> d t - t^2 D
    DiffOp conjugated_by_reciprocal(int d) const;

    // common-denominator polynomial coefficients, content-free, positive lead
    std::vector<Poly> cleared() const;
    // equality modulo left multiplication by a rational function
    static bool same_normalized(const DiffOp& a, const DiffOp& b);

    // indicial polynomial chi(s) at t = 0 (roots are the local exponents)
    Poly indicial_polynomial() const;

    // A = G * B + R with order(R) < order(B); exact, may be expensive
    static std::pair<DiffOp, DiffOp> right_divide(const DiffOp& a, const DiffOp& b);

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<RatFunc> c_;
};

} // namespace isingff
