#include "isingff/hyper.hpp"

#include "isingff/seq.hpp"

#include <doctest.h>

using namespace isingff;

TEST_CASE("F series basics") {
    Series F0 = F_series(0, 6);
    CHECK(F0.at(0) == 1);
    CHECK(F0.at(1) == Rational(1, 4));
    CHECK(F0.at(2) == Rational(9, 64));
    CHECK(F_series(1, 4).at(1) == Rational(3, 8));
    for (int N = 0; N <= 5; ++N) CHECK(F_series(N, 3).at(0) == 1);
}

TEST_CASE("basis self-convolution and derivative coefficients") {
    Series F0 = F_series(0, 6);
    CHECK((F0 * F0).at(1) == Rational(1, 2)); // 2 * 1 * 1/4
    Series d = F0.derivative();
    CHECK(d.at(0) == Rational(1, 4));
    CHECK(d.at(1) == Rational(9, 32));
}

TEST_CASE("contiguous relations hold coefficientwise") {
    int order = 10;
    for (int N = 0; N <= 4; ++N) {
        Series F = F_series(N, order);
        Series F1 = F_series(N + 1, order);
        Series Fb = Fbar_series(N, order);
        Series G = G_series(N, order);
        Poly one_minus_t({Rational(1), Rational(-1)});
        // Fbar = 4(N+1)/(2N+1) dF/dt
        CHECK((Fb - F.derivative() * Rational(4L * (N + 1), 2L * N + 1)).is_zero());
        // Fbar (1-t) = 2(N+1) F - (2N+1) F1
        Series lhs = Fb * Series::from_poly(one_minus_t, order);
        Series rhs = F * Rational(2L * (N + 1)) - F1 * Rational(2L * N + 1);
        CHECK((lhs - rhs).is_zero());
        // G (1-t)^2 = (1+t) F - t (2N+1)/(N+1) F1
        Series lhs2 = G * Series::from_poly(one_minus_t * one_minus_t, order);
        Series rhs2 = F * Series::from_poly(Poly({Rational(1), Rational(1)}), order) -
                      F1.shifted(1) * Rational(2L * N + 1, N + 1);
        CHECK((lhs2 - rhs2).truncated(order - 1).is_zero());
    }
}

TEST_CASE("u1 and u2 shapes") {
    int order = 14;
    Series u1 = u1_series(1, order);
    CHECK(u1.valuation() == 2);
    CHECK(u1.at(3) == Rational(3, 8)); // b_1(1)

    LogSeries u2 = u2_logseries(1, order);
    CHECK(u2.analytic().valuation() == 1);
    CHECK(u2.analytic().at(1) == 1);
    // log channel is -N lambda^2 u1
    Series expect = u1 * Rational(-1, 4);
    CHECK((u2.channel(1) - expect).is_zero());
    CHECK_THROWS_AS(u2_logseries(0, 8), std::domain_error);
}

TEST_CASE("u2 analytic head has a single term at N=1") {
    LogSeries u2 = u2_logseries(1, 10);
    Series w = w2_series(1, 10);
    CHECK(w.at(1) == 1);
    // head stops immediately; everything after t^1 comes from the k-weighted tail
    CHECK(u2.analytic().at(2) == Rational(1, 4) * b_coeff(1, 0) * k_coeff(1, 0));
}

TEST_CASE("wronskian residual vanishes in both channels") {
    for (int N = 1; N <= 4; ++N) {
        LogSeries r = wronskian_residual(N, N + 12);
        CHECK(r.is_zero());
    }
}

TEST_CASE("basis bundle is coherent") {
    BasisBundle b = make_basis(2, 12);
    CHECK(b.u1_N.valuation() == 3);
    CHECK((b.u1_N - b.F_N.shifted(3)).is_zero());
    CHECK((b.u2_N.channel(1) - b.u1_N * (Rational(-2) * lambda_coeff(2) * lambda_coeff(2))).is_zero());
}
