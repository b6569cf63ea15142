#include "isingff/logseries.hpp"
#include "isingff/palin.hpp"
#include "isingff/poly.hpp"
#include "isingff/ratfunc.hpp"
#include "isingff/series.hpp"

#include <doctest.h>

#include <random>

using namespace isingff;

namespace {

Series from_list(int val, std::initializer_list<long> c, int order) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Series(val, std::move(v), order);
}

std::mt19937 rng(20260810);

Series random_series(int order) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5), val(0, 2);
    int v = val(rng);
    std::vector<Rational> c;
    for (int i = v; i < order; ++i) c.push_back(Rational(num(rng), den(rng)));
    return Series(v, std::move(c), order);
}

} // namespace

TEST_CASE("series product basics") {
    int order = 8;
    Series a = from_list(0, {1, 1}, order);  // 1 + t
    Series b = from_list(0, {1, -1}, order); // 1 - t
    Series p = a * b;
    CHECK(p.at(0) == 1);
    CHECK(p.at(1) == 0);
    CHECK(p.at(2) == -1);

    Series s = random_series(order);
    CHECK((s * Series::one(order)) == s);

    // one empty factor gives the zero series at the right truncation
    Series z = Series::zero(order) * s;
    CHECK(z.is_zero());
}

TEST_CASE("series truncation order of products") {
    // known-below-t^5 times t^3 monomial is known below t^8
    Series a = from_list(0, {1, 2, 3, 4, 5}, 5);
    Series m = Series::monomial(3, Rational(1), 10);
    CHECK((a * m).order() == 8);
    CHECK((a * m).at(7) == 5);
}

TEST_CASE("series derivative") {
    Series t2 = Series::monomial(2, Rational(1), 9);
    Series d = t2.derivative();
    CHECK(d.at(1) == 2);
    CHECK(Series::one(9).derivative().is_zero());
    // negative valuation flows through
    Series inv = Series::monomial(-1, Rational(1), 5).derivative();
    CHECK(inv.at(-2) == -1);
}

TEST_CASE("series ring axioms on random inputs") {
    int order = 7;
    for (int trial = 0; trial < 25; ++trial) {
        Series a = random_series(order), b = random_series(order), c = random_series(order);
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a + b) == (b + a));
    }
}

TEST_CASE("series division by polynomial") {
    int order = 10;
    Series s = random_series(order);
    Poly p({Rational(2), Rational(0), Rational(-1), Rational(7)});
    Series q = s.div_poly(p);
    CHECK((q * Series::from_poly(p, order)).truncated(q.order()) == s.truncated(q.order()));
    // division by t^2 * unit shifts the valuation
    Poly tp = Poly::monomial(2, Rational(3)) + Poly::monomial(3, Rational(1));
    Series w = Series::monomial(4, Rational(6), order).div_poly(tp);
    CHECK(w.valuation() == 2);
    CHECK(w.at(2) == 2);
}

TEST_CASE("log series derivative carries channels down") {
    int order = 9;
    // (0 + 1 ln t)' = 1/t
    LogSeries l(Series::zero(order), Series::one(order));
    LogSeries d = l.derivative();
    CHECK(d.analytic().at(-1) == 1);
    CHECK(d.log_free());

    // purely analytic input: plain derivative, no channels
    LogSeries a(Series::monomial(3, Rational(2), order));
    CHECK(a.derivative().log_free());
    CHECK(a.derivative().analytic().at(2) == 6);

    // (t^2 ln t)' = 2 t ln t + t
    LogSeries m(Series::zero(order), Series::monomial(2, Rational(1), order));
    LogSeries md = m.derivative();
    CHECK(md.channel(1).at(1) == 2);
    CHECK(md.analytic().at(1) == 1);
}

TEST_CASE("log series product rule is channel-consistent") {
    int order = 8;
    for (int trial = 0; trial < 10; ++trial) {
        LogSeries a(random_series(order));
        LogSeries b(random_series(order));
        LogSeries lhs = (a * b).derivative();
        LogSeries rhs = a.derivative() * b + a * b.derivative();
        CHECK((lhs - rhs).is_zero());
    }
    // and with a genuine log channel present
    LogSeries u(random_series(order), random_series(order));
    LogSeries v(random_series(order), random_series(order));
    CHECK(((u * v).derivative() - (u.derivative() * v + u * v.derivative())).is_zero());
}

TEST_CASE("higher log channels appear in powers") {
    int order = 6;
    LogSeries u(Series::one(order), Series::one(order)); // 1 + ln t
    LogSeries u3 = u * u * u;
    CHECK(u3.channels() == 4);
    CHECK(u3.channel(3).at(0) == 1);
    CHECK(u3.channel(2).at(0) == 3);
}

TEST_CASE("palindromic reflection") {
    Poly p({Rational(1), Rational(2)}); // 1 + 2t
    Poly r = palin_reflect(p, 1);
    CHECK(r.at(0) == 2);
    CHECK(r.at(1) == 1);
    CHECK(palin_reflect(r, 1) == p); // involution

    // a palindromic polynomial is a fixed point
    Poly q({Rational(4), Rational(5), Rational(4)});
    CHECK(palin_reflect(q, 2) == q);
    CHECK(q.is_palindromic(2));

    CHECK_THROWS(palin_reflect(q, 1));
    CHECK_THROWS(PalinPoly(Poly({Rational(1), Rational(2), Rational(3)}), 2));
}

TEST_CASE("palindromic cores of the tables are reflection fixed points") {
    // t (4t^2 + 5t + 4): center is valuation + core degree + valuation = 4
    Poly p({Rational(0), Rational(4), Rational(5), Rational(4)});
    CHECK(palin_reflect(p, 4) == p);
    CHECK_FALSE(palin_reflect(p, 3) == p);
    // the bare core reflects about its own degree
    Poly core({Rational(4), Rational(5), Rational(4)});
    CHECK(palin_reflect(core, 2) == core);
}

TEST_CASE("reflection is an involution on random polynomials") {
    std::uniform_int_distribution<int> num(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> c;
        for (int i = 0; i < 6; ++i) c.emplace_back(num(rng));
        Poly p(std::move(c));
        int d = 8;
        CHECK(palin_reflect(palin_reflect(p, d), d) == p);
    }
}

TEST_CASE("rational function reduction") {
    Poly t = Poly::monomial(1, Rational(1));
    Poly t2 = Poly::monomial(2, Rational(1));
    RatFunc r(t2 + t, t); // t(t+1)/t = t+1
    CHECK(r.is_poly());
    CHECK(r.num().degree() == 1);
    RatFunc d = RatFunc(Poly::constant(Rational(1)), t).derivative(); // -1/t^2
    CHECK(d.num().at(0) == -1);
    CHECK(d.den().degree() == 2);
    CHECK_THROWS(RatFunc(t, Poly()));
}

TEST_CASE("polynomial gcd and division") {
    Poly a({Rational(-1), Rational(0), Rational(1)}); // t^2 - 1
    Poly b({Rational(1), Rational(1)});               // t + 1
    Poly g = Poly::gcd(a, b);
    CHECK(g.degree() == 1);
    auto [q, r] = Poly::divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q.at(1) == 1);
    CHECK(q.at(0) == -1);
}
