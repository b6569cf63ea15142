#include "isingff/oracle.hpp"

#include "isingff/formfactor.hpp"
#include "isingff/hyper.hpp"
#include "isingff/seq.hpp"

#include <doctest.h>

using namespace isingff;

TEST_CASE("half-integer beta values") {
    CHECK(beta_half(Rational(1, 2), Rational(1, 2)) == 1); // the pi normalizes away
    CHECK(beta_half(Rational(3, 2), Rational(1, 2)) == Rational(1, 2));
    for (int N = 1; N <= 6; ++N)
        CHECK(beta_half(Rational(N) + Rational(1, 2), Rational(1, 2)) == lambda_coeff(N));
    // integer-integer patterns do not produce the single pi and are rejected
    CHECK_THROWS_AS(beta_half(Rational(2), Rational(3)), std::domain_error);
}

TEST_CASE("moment series basics") {
    // the one-fold integrand: lambda_N F_N
    for (int N = 0; N <= 3; ++N) {
        Series m = moment_series({Rational(N) - Rational(1, 2), Rational(-1, 2)}, 8);
        Series expect = F_series(N, 8) * lambda_coeff(N);
        CHECK((m - expect).is_zero());
    }
    // constant term of any moment is the plain beta value
    Series m = moment_series({Rational(5, 2), Rational(1, 2)}, 4);
    CHECK(m.at(0) == beta_half(Rational(7, 2), Rational(3, 2)));
    // first-order coefficient of a (+1/2) moment carries the -1/2 binomial
    CHECK(m.at(1) == Rational(-1, 2) * beta_half(Rational(9, 2), Rational(3, 2)));
}

TEST_CASE("one-fold series") {
    for (int N = 0; N <= 4; ++N)
        CHECK((oracle_f(1, N, 9) - F_series(N, 9) * lambda_coeff(N)).is_zero());
}

TEST_CASE("two-fold series against the construction") {
    // N = 0 row in closed form
    Series o = oracle_f(2, 0, 9);
    Series expect = (F_series(0, 9) * F_series(1, 9)).shifted(1) * Rational(1, 4);
    CHECK((o - expect).is_zero());
    for (int N = 1; N <= 3; ++N) {
        int order = 2 * N + 8;
        CHECK((oracle_f(2, N, order) - assemble(2, N, order)).is_zero());
    }
}

TEST_CASE("three-fold series against the construction") {
    for (int N = 1; N <= 2; ++N) {
        int order = 2 * N + 7;
        CHECK((oracle_f(3, N, order) - assemble(3, N, order)).is_zero());
    }
    Series o = oracle_f(3, 0, 7);
    CHECK(o.valuation() == 2);
    CHECK(o.at(2) == selberg_leading(3, 0).coefficient);
}

TEST_CASE("four-fold series") {
    Series o = oracle_f4(1, 9);
    CHECK(o.valuation() == 6); // 2(N+2)
    CHECK(o.at(6) == selberg_leading(4, 1).coefficient);
    CHECK((o - assemble(4, 1, 9)).is_zero());
}

TEST_CASE("partial integration identity of the two-fold integral") {
    for (int N = 1; N <= 2; ++N) {
        int order = 2 * N + 7;
        Series f2N = oracle_f(2, N, order);
        Series f2N1 = oracle_f(2, N + 1, order);
        Series half = (F_series(N, order) * F_series(N + 1, order)).shifted(N + 1) *
                      (lambda_coeff(N) * lambda_coeff(N + 1) / 2);
        CHECK((half - (f2N - f2N1) * Rational(N) - f2N).is_zero());
    }
}
