#include "isingff/formfactor.hpp"

#include "isingff/fixtures.hpp"
#include "isingff/hyper.hpp"
#include "isingff/seq.hpp"

#include <doctest.h>

using namespace isingff;

TEST_CASE("quadratic amplitudes") {
    CHECK(amplitude2(1, 0) == Rational(-1, 2));
    CHECK(amplitude2(1, 1) == Rational(9, 8));              // N beta_N
    CHECK(amplitude2(1, 2) == Rational(-81, 128));          // -(N/2) beta_N^2
    for (int N = 1; N <= 5; ++N) {
        CHECK(amplitude2(N, 1) == Rational(N) * beta_coeff(N));
        CHECK(amplitude2(N, 2) == Rational(-N, 2) * beta_coeff(N) * beta_coeff(N));
    }
}

TEST_CASE("quadratic polynomials match the reference rows") {
    // spot values; the full sweep lives in the fixtures suite
    PalinPoly c22 = C2_poly(1, 2);
    CHECK(c22.poly.at(2) == Rational(-81, 128));
    CHECK(c22.poly.at(3) == Rational(-81, 128));
    CHECK(c22.center == 2 * 1 + 1 + 2);

    PalinPoly c21 = C2_poly(1, 1);
    CHECK(c21.poly.at(2) == Rational(9, 8) * Rational(5, 4)); // middle: lambda^2 + edge
    PalinPoly c20 = C2_poly(3, 0);
    CHECK(c20.poly.at(0) == Rational(-3, 2)); // value at t = 0 is -N/2
    for (int N = 1; N <= 5; ++N) CHECK(C2_poly(N, 0).poly.at(0) == Rational(-N, 2));
    CHECK_THROWS_AS(C2_poly(0, 0), std::domain_error);
}

TEST_CASE("cross relation between neighbouring quadratic layers") {
    for (int N = 1; N <= 4; ++N) {
        Rational b1 = beta_coeff(N + 1);
        Poly lhs = C2_poly(N, 0).poly * (Rational(N + 1L) * b1 * b1 / Rational(N));
        Poly rhs = C2_poly(N + 1, 2).poly;
        CHECK(lhs.shifted(2) == rhs);
    }
}

TEST_CASE("cubic polynomials and constants") {
    CHECK(make_f3(1).K[0] == Rational(2, 3));
    PalinPoly c33 = C3_poly(1, 3);
    CHECK(c33.poly.at(3) == Rational(243, 512));
    CHECK(c33.poly.degree() == 3);
    // K lambda + A3_0 + ((N-1)/N) lambda A2_0 = 0
    for (int N = 1; N <= 6; ++N) {
        Rational lhs = Rational(3L * N + 1, 6) * lambda_coeff(N) + amplitude3(N, 0) +
                       Rational(N - 1, N) * lambda_coeff(N) * amplitude2(N, 0);
        CHECK(lhs == 0);
    }
    // cross-check of the first core coefficient of the m=0 entry at N=1
    Rational c01 = C3_poly(1, 0).poly.at(1) / amplitude3(1, 0);
    CHECK(c01 == Rational(3) * a_coeff(2, 1) + b_coeff(1, 1));
    CHECK(c01 == Rational(21, 8));
}

TEST_CASE("assembled series leading behaviour") {
    for (int N = 1; N <= 4; ++N) {
        Series f2 = assemble(2, N, 2 * N + 6);
        CHECK(f2.valuation() == N + 1);
        Rational lam1 = lambda_coeff(N + 1);
        CHECK(f2.at(N + 1) == lam1 * lam1 / (2 * N + 1));
        Series f3 = assemble(3, N, 2 * N + 6);
        CHECK(f3.valuation() == N + 2);
    }
    CHECK(assemble(3, 1, 6).at(3) == Rational(1, 1024));
}

TEST_CASE("quadratic product recursion") {
    CHECK((f2_recursion_series(1, 10) - assemble(2, 1, 10)).is_zero()); // empty sum
    CHECK((f2_recursion_series(2, 10) - assemble(2, 2, 10)).is_zero());
    Series f23 = f2_recursion_series(3, 8);
    CHECK(f23.valuation() == 4);
    CHECK(f23.at(4) == lambda_coeff(4) * lambda_coeff(4) / 7);
}

TEST_CASE("alternative cubic assembly") {
    for (int N = 1; N <= 2; ++N)
        CHECK((f3_alternative(N, 2 * N + 8) - assemble(3, N, 2 * N + 8)).is_zero());
}

TEST_CASE("quartic solve reproduces the reference constants") {
    QuarticSolve s = make_f4(1);
    CHECK(s.expr.K[0] == Rational(-1, 24));
    CHECK(s.expr.K[1] == Rational(5, 6));
    CHECK(s.kbar == Rational(3, 8));
    // the F_2^4 entry of the N=1 table
    Poly c44 = s.expr.C[4].poly;
    Rational pref = Rational(2187, 32768);
    CHECK(c44.at(4) == pref);
    CHECK(c44.at(5) == pref * 4);
    CHECK(c44.at(6) == pref);
    for (int N : {2, 3}) {
        QuarticSolve q = make_f4(N);
        CHECK(q.expr.K[1] == Rational(1, 3) + Rational(N, 2));
    }
}

TEST_CASE("cancellation orders") {
    auto r24 = cancellation_report(2, 4);
    CHECK(r24.pass);
    CHECK(r24.expected_zero_through == 4);
    CHECK(r24.first_nonzero == 5);
    auto r32 = cancellation_report(3, 2);
    CHECK(r32.pass);
    CHECK(r32.first_nonzero == 4);
    auto r41 = cancellation_report(4, 1);
    CHECK(r41.pass);
    CHECK(r41.expected_zero_through == 5);
    CHECK(r41.first_nonzero == 6);
}

TEST_CASE("palindromy and degree law of every constructed polynomial") {
    for (int N = 1; N <= 5; ++N) {
        for (int m = 0; m <= 2; ++m) {
            PalinPoly p = C2_poly(N, m);
            CHECK(p.poly.degree() == 2 * N + 1);
            CHECK(*p.poly.valuation() == m);
            CHECK(p.poly.is_palindromic(p.center));
        }
        for (int m = 0; m <= 3; ++m) {
            PalinPoly p = C3_poly(N, m);
            CHECK(p.poly.degree() == 2 * N + 1);
            CHECK(p.poly.is_palindromic(p.center));
        }
    }
    QuarticSolve s = make_f4(2);
    for (int m = 0; m <= 4; ++m) {
        CHECK(s.expr.C[m].poly.degree() == 2 * (2 * 2 + 1));
        CHECK(s.expr.C[m].poly.is_palindromic(s.expr.C[m].center));
    }
}
