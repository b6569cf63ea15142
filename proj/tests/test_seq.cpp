#include "isingff/seq.hpp"

#include <doctest.h>

using namespace isingff;

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rational(7, 3), 0) == 1);
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(pochhammer(Rational(-1), 2) == 0); // zero crossing computed literally
    CHECK(pochhammer(Rational(-3, 2), 4) == Rational(-3, 2) * Rational(-1, 2) * Rational(1, 2) * Rational(3, 2));
    CHECK_THROWS_AS(pochhammer(Rational(1), -1), std::domain_error);
}

TEST_CASE("structure constants") {
    CHECK(lambda_coeff(0) == 1);
    CHECK(lambda_coeff(2) == Rational(3, 8));
    CHECK(beta_coeff(1) == Rational(9, 8));
    CHECK(structure_constants(2).second == Rational(25, 24));
    CHECK_THROWS_AS(beta_coeff(0), std::domain_error);
}

TEST_CASE("a coefficients and their range") {
    for (int N = 1; N <= 6; ++N) CHECK(a_coeff(N, 0) == 1);
    CHECK(a_coeff(2, 1) == Rational(3, 4));
    CHECK_THROWS_AS(a_coeff(1, 1), std::domain_error); // sum stops at n = N-1
    CHECK_THROWS_AS(a_coeff(3, 5), std::domain_error);
}

TEST_CASE("b coefficients") {
    CHECK(b_coeff(0, 0) == 1);
    CHECK(b_coeff(5, 0) == 1);
    CHECK(b_coeff(0, 1) == Rational(1, 4));
    CHECK(b_coeff(1, 1) == Rational(3, 8));
    // term-ratio recurrence of the underlying hypergeometric series
    for (int N = 0; N <= 4; ++N)
        for (int n = 1; n <= 8; ++n) {
            Rational ratio = (Rational(1, 2) + (n - 1)) * (Rational(1, 2) + N + (n - 1)) /
                             ((Rational(N + 1) + (n - 1)) * Rational(n));
            CHECK(b_coeff(N, n) == b_coeff(N, n - 1) * ratio);
        }
    for (int N = 2; N <= 5; ++N)
        for (int n = 1; n <= N - 1; ++n) {
            Rational ratio = (Rational(1, 2) + (n - 1)) * (Rational(1, 2) - N + (n - 1)) /
                             ((Rational(1 - N) + (n - 1)) * Rational(n));
            CHECK(a_coeff(N, n) == a_coeff(N, n - 1) * ratio);
        }
}

TEST_CASE("harmonic partial sums and k") {
    CHECK(harmonic_partial(Rational(1), 0) == 0);
    CHECK(harmonic_partial(Rational(1), 2) == Rational(3, 2));
    CHECK(harmonic_partial(Rational(1, 2), 1) == 2);
    CHECK(k_coeff(0, 0) == 0);
    CHECK(k_coeff(1, 0) == -1);
    CHECK(k_coeff(0, 1) == -2);
}

TEST_CASE("leading terms of the integrals") {
    auto [e2, c2] = selberg_leading(2, 1);
    CHECK(e2 == 2);
    CHECK(c2 == Rational(3, 64));
    for (int N = 0; N <= 12; ++N) {
        auto even = selberg_leading(2, N);
        CHECK(even.exponent == N + 1);
        Rational lam1 = lambda_coeff(N + 1);
        CHECK(even.coefficient == lam1 * lam1 / (2 * N + 1));
        auto odd = selberg_leading(3, N);
        CHECK(odd.exponent == Rational(3L * N, 2) + 2);
        CHECK(odd.coefficient ==
              lam1 * lam1 * lam1 / (Rational(2) * (2 * N + 1) * Rational((N + 2L) * (N + 2))));
    }
}
