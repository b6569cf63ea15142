#pragma once

#include "isingff/palin.hpp"
#include "isingff/series.hpp"

#include <array>
#include <vector>

namespace isingff {

// Factorized diagonal form factor: lower-order terms plus palindromic
// polynomials against the F_N / F_{N+1} monomial basis. Odd n is stored in
// its t^(N/2)-normalized form, so every exponent in sight is an integer.
struct FormFactorExpr {
    int n = 0; // 2, 3, or 4
    int N = 0;
    bool odd() const { return n % 2 != 0; }
    // K[m] multiplies f^(2m) (even) or the normalized f^(2m+1) (odd)
    std::vector<Rational> K;
    // C[m] multiplies F_N^(n-m) F_{N+1}^m
    std::vector<PalinPoly> C;
};

// amplitudes of the polynomial cores
Rational amplitude2(int N, int m); // A_m for the quadratic layer
Rational amplitude3(int N, int m); // A_m for the cubic layer

// palindromic C polynomials; N >= 1
PalinPoly C2_poly(int N, int m);
PalinPoly C3_poly(int N, int m);
PalinPoly C4_poly(int N, int m); // via the quartic solve below

FormFactorExpr make_f2(int N);
FormFactorExpr make_f3(int N);

// quartic layer: truncated expressions completed by palindromy, with the
// scalar unknowns fixed by the exact linear system "assembled series vanishes
// through t^(2N+3)". kbar is the overall scale of the homogeneous piece and
// c2_middle the center coefficient of C_2.
struct QuarticSolve {
    FormFactorExpr expr;
    Rational kbar;
    Rational c2_middle;
};
QuarticSolve make_f4(int N);

// exact truncated series of the assembled expression (normalized for odd n)
Series assemble(const FormFactorExpr& f, int order);
Series assemble(int n, int N, int order);

// independent construction of the quadratic layer by the product recursion
Series f2_recursion_series(int N, int order);

// alternative cubic form: prefactor times the one-fold term plus bare cores
Series f3_alternative(int N, int order);

struct CancellationReport {
    int n = 0, N = 0;
    int expected_zero_through = 0; // assembled series vanishes through here
    int first_nonzero = 0;
    Rational leading;
    bool pass = false;
};
CancellationReport cancellation_report(int n, int N);

} // namespace isingff
