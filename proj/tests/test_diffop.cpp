#include "isingff/diffop.hpp"

#include "isingff/hyper.hpp"
#include "isingff/named_ops.hpp"
#include "isingff/seq.hpp"
#include "isingff/symprod.hpp"

#include <doctest.h>

using namespace isingff;

namespace {

DiffOp mul_t() { return DiffOp::mul_by(Poly::monomial(1, Rational(1))); }

} // namespace

TEST_CASE("composition and the canonical commutator") {
    DiffOp d = DiffOp::derivative();
    DiffOp comm = d * mul_t() - mul_t() * d;
    CHECK(comm.order() == 0);
    CHECK(comm.coeff(0).num().degree() == 0);
    CHECK(comm.coeff(0).num().at(0) == 1);

    DiffOp L = build_named("O2", 2);
    CHECK(DiffOp::same_normalized(L * DiffOp::identity(), L));
}

TEST_CASE("application to series and log channels") {
    int order = 12;
    DiffOp d = DiffOp::derivative();
    CHECK(d.apply(Series::monomial(2, Rational(1), order)).at(1) == 2);
    // zeroth coefficient of O2 is (4+4N-t-2Nt)/(4t^2(1-t)), here at N=1
    DiffOp o2 = build_named("O2", 1);
    RatFunc c0 = o2.coeff(0);
    Poly lhs = c0.num() * (Poly::monomial(2, Rational(4)) - Poly::monomial(3, Rational(4)));
    Poly rhs = c0.den() * Poly({Rational(8), Rational(-3)});
    CHECK(lhs == rhs);
    for (int N = 1; N <= 3; ++N) {
        DiffOp op = build_named("O2", N);
        CHECK(op.apply(LogSeries(u1_series(N, order + N))).truncated(order - 4).is_zero());
        CHECK(op.apply(u2_logseries(N, order + N)).truncated(order - 4).is_zero());
    }
}

TEST_CASE("ill-posed application is reported") {
    // dividing by a pure t coefficient needs enough valuation in the input
    DiffOp bad({RatFunc(Poly::constant(Rational(1)), Poly::monomial(3, Rational(1)))});
    Series s = Series::one(6);
    Series r = bad.apply(s);
    CHECK(r.valuation() == -3); // Laurent tail is representable, not an error
    CHECK(r.at(-3) == 1);
}

TEST_CASE("conjugation by integer and half powers") {
    // t^-1 D t = D + 1/t
    DiffOp c = DiffOp::derivative().conjugated_by_power(Rational(1));
    CHECK(c.order() == 1);
    CHECK(c.coeff(0).den().degree() == 1);
    // even case reproduces the one-fold annihilator exactly
    for (int N = 2; N <= 6; N += 2)
        CHECK(DiffOp::same_normalized(build_named("O2", N).conjugated_by_power(Rational(N, 2) + 1),
                                      build_named("L2", N)));
    // odd case goes through half-integer sigma and stays exact
    for (int N = 1; N <= 5; N += 2)
        CHECK(DiffOp::same_normalized(build_named("O2", N).conjugated_by_power(Rational(N, 2) + 1),
                                      build_named("L2", N)));
}

TEST_CASE("reciprocal conjugation is an involution up to normalization") {
    DiffOp om = build_named("Omega2_2", 2);
    DiffOp twice = om.conjugated_by_reciprocal(7).conjugated_by_reciprocal(7);
    CHECK(DiffOp::same_normalized(om, twice));
}

TEST_CASE("symmetric power reproduces the quadratic-layer operator") {
    for (int N = 1; N <= 3; ++N) {
        DiffOp s2 = symmetric_power(build_named("O2", N), 2);
        CHECK(s2.order() == 3);
        CHECK(DiffOp::same_normalized(s2, build_named("Omega2_2", N)));
    }
    DiffOp l2 = build_named("L2", 2);
    CHECK(DiffOp::same_normalized(symmetric_power(l2, 1), l2));
}

TEST_CASE("symmetric product degenerate case") {
    // two commuting first-order factors: the product of their solutions
    // satisfies a single first-order equation
    DiffOp first({RatFunc(Poly::constant(Rational(-1)), Poly::monomial(1, Rational(1))),
                  RatFunc::constant(Rational(1))}); // D - 1/t kills t
    DiffOp K = symmetric_product({first, first});
    CHECK(K.order() == 1);
    CHECK(K.apply(Series::monomial(2, Rational(1), 8)).is_zero());
}

TEST_CASE("symmetric product of distinct layers has full order") {
    DiffOp K = symmetric_product({build_named("O2", 1), build_named("O2", 2)});
    CHECK(K.order() == 4);
    int order = 20;
    LogSeries prod = u2_logseries(1, order) * u2_logseries(2, order);
    CHECK(K.apply(prod).truncated(order - 10).is_zero());
}

TEST_CASE("symmetric powers annihilate every mixed product") {
    for (int N = 1; N <= 2; ++N) {
        int order = 2 * N + 18;
        LogSeries u1N(u1_series(N, order));
        LogSeries u2N = u2_logseries(N, order);
        for (int k = 2; k <= 4; ++k) {
            DiffOp sk = symmetric_power(build_named("O2", N), k);
            CHECK(sk.order() == k + 1);
            for (int i = 0; i <= k; ++i) {
                LogSeries x(Series::one(order));
                for (int j = 0; j < i; ++j) x = x * u1N;
                for (int j = 0; j < k - i; ++j) x = x * u2N;
                CHECK(sk.apply(x).truncated(order - 14).is_zero());
            }
        }
    }
}

TEST_CASE("right division recovers factors") {
    DiffOp A = build_named("L4", 2) * build_named("Q", 2);
    auto [G, R] = DiffOp::right_divide(A, build_named("Q", 2));
    CHECK(R.is_zero());
    CHECK(DiffOp::same_normalized(G, build_named("L4", 2)));
}

TEST_CASE("identity residual of composed chains") {
    CHECK(identity_residual({build_named("L4", 1), build_named("Q", 1)},
                            {build_named("R", 1), symmetric_power(build_named("L2", 1), 3)})
              .is_zero());
    CHECK_FALSE(identity_residual({build_named("L4", 1)}, {build_named("Q", 1)}).is_zero());
}

TEST_CASE("indicial polynomial of the quadratic layers") {
    Poly chi = build_named("Omega2_2", 2).indicial_polynomial();
    CHECK(chi.degree() == 3);
    for (long r : {2L, 4L, 6L}) CHECK(chi.eval(Rational(r)) == 0);
}

TEST_CASE("operator catalog rejects out-of-range requests") {
    CHECK_THROWS_AS(build_named("J4_0", 7), std::domain_error);
    CHECK_THROWS_AS(build_named("J4_2", 3), std::domain_error);
    CHECK_THROWS_AS(build_named("nope", 1), std::invalid_argument);
    CHECK(build_named("J4_0", 2).order() == 0);
}

TEST_CASE("operator json coefficients stay reduced") {
    DiffOp o2 = build_named("O2", 3);
    for (const auto& c : o2.coeffs()) {
        if (c.is_zero()) continue;
        CHECK(Poly::gcd(c.num(), c.den()).degree() == 0);
        CHECK(c.den().leading() == 1);
    }
}
