#pragma once

#include "isingff/rational.hpp"

#include <utility>

namespace isingff {

// Scalar sequences behind the hypergeometric basis. Everything is memoized
// per (N, n); the tables are guarded and safe for concurrent readers.

// (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1. n must be nonnegative.
Rational pochhammer(const Rational& x, long n);

Rational binomial(long n, long k);

// lambda_N = (1/2)_N / N!
Rational lambda_coeff(int N);

// beta_N = (2N+1)^2 / (4 N (N+1)), defined for N >= 1
Rational beta_coeff(int N);

// a_n(N) = (1/2)_n (1/2-N)_n / ((1-N)_n n!), the analytic-head range:
// n = 0 for any N, otherwise 0 <= n <= N-1. Out of range throws.
Rational a_coeff(int N, int n);

// b_n(N) = (1/2)_n (1/2+N)_n / ((N+1)_n n!)
Rational b_coeff(int N, int n);

// H_n(z) = sum_{k=0}^{n-1} 1/(z+k); H_0 = 0
Rational harmonic_partial(const Rational& z, int n);

// k_n = H_n(1) + H_{n+N}(1) - H_n(1/2) - H_{n+N}(1/2)
Rational k_coeff(int N, int n);

// (lambda_N, beta_N) in one call; beta requires N >= 1
std::pair<Rational, Rational> structure_constants(int N);

struct SelbergLeading {
    Rational exponent;    // power of t of the first nonzero term (may be half-integer)
    Rational coefficient; // exact rational, pi powers cancelled
};

// Leading small-t behaviour of the nfold-dimensional integral (nfold >= 2).
// Even nfold = 2n: exponent n(N+n). Odd nfold = 2n+1: exponent N(n+1/2)+n(n+1).
SelbergLeading selberg_leading(int nfold, int N);

void clear_seq_caches();

} // namespace isingff
