#include "isingff/jsonio.hpp"

#include "isingff/formfactor.hpp"
#include "isingff/named_ops.hpp"

#include <doctest.h>

#include <random>

using namespace isingff;

namespace {
std::mt19937 rng(77);
}

TEST_CASE("rational strings round-trip bit-exactly") {
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 99991);
    for (int i = 0; i < 200; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(rat_from_string(to_string(r)) == r);
    }
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(-3, 7)) == "-3/7");
    CHECK_THROWS(rat_from_string(""));
    CHECK_THROWS(rat_from_string("x/y"));
}

TEST_CASE("series round-trips through json") {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    for (int i = 0; i < 50; ++i) {
        std::vector<Rational> c;
        for (int k = 0; k < 7; ++k) c.push_back(Rational(num(rng), den(rng)));
        Series s(-2 + (i % 5), std::move(c), 9 + (i % 5));
        Series back = series_from_json(to_json(s));
        CHECK(back == s);
    }
}

TEST_CASE("polynomial round-trips through json") {
    Poly p({Rational(1, 3), Rational(0), Rational(-7, 2), Rational(4)});
    CHECK(poly_from_json(to_json(p)) == p);
}

TEST_CASE("larger structures serialize") {
    auto j = to_json(make_f2(2));
    CHECK(j["n"] == 2);
    CHECK(j["C"].size() == 3);
    CHECK(j["K"][0] == "1");
    auto jop = to_json(build_named("O2", 1));
    CHECK(jop["order"] == 2);
    CHECK(jop["coeffs"].size() == 3);
}
