#pragma once

#include "isingff/series.hpp"

namespace isingff {

// Independent ground truth: term-by-term expansion of the multiple integrals.
// Every square-root factor is expanded around t = 0 and the x-integrals are
// Beta moments at half-integer arguments, so the series is exact; odd n is
// returned in t^(N/2)-normalized form.

// Beta(a, b) for positive integer/half-integer a, b, with the single pi that
// the moment combinations produce divided out; any other pattern throws.
Rational beta_half(const Rational& a, const Rational& b);

// Key of a one-variable moment integral(0..1) x^(p + half_offset) (1-x)^eps (1-tx)^eps dx,
// expanded in t. half_offset is N +/- 1/2; eps in {-1/2, +1/2} ties the
// (1-x) and (1-tx) exponents together the way the integrands pair them.
struct MomentKey {
    Rational power;  // exponent of x (already includes the half offset)
    Rational eps;    // common exponent of (1-x) and (1-tx)
    bool operator<(const MomentKey& o) const {
        return power < o.power || (power == o.power && eps < o.eps);
    }
};

// pi-normalized expansion of the keyed moment, cached
Series moment_series(const MomentKey& key, int order);

// exact truncated series of the n-fold integral, n = 1, 2, 3
// (normalized by t^(N/2) for odd n)
Series oracle_f(int n, int N, int order);

// the four-fold integral; order should stay small (cost grows fast)
Series oracle_f4(int N, int order);

void clear_oracle_cache();

} // namespace isingff
