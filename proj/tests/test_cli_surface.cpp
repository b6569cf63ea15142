#include "isingff/verify.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace isingff;

TEST_CASE("suite registry") {
    auto names = suite_names();
    CHECK(names.size() == 9);
    CHECK_THROWS_AS(run_suite("nonsense", VerifyOptions{}), std::invalid_argument);
}

TEST_CASE("verification output is deterministic across parallelism degrees") {
    VerifyOptions seq;
    seq.N_max = 2;
    VerifyOptions par = seq;
    par.jobs = 4;
    auto a = run_suite("wronskian", seq);
    auto b = run_suite("wronskian", par);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].pass == b[i].pass);
        CHECK(a[i].detail == b[i].detail);
    }
    CHECK(all_passed(a));
}

TEST_CASE("findings are informational") {
    auto r = run_suite("findings", VerifyOptions{});
    REQUIRE(!r.empty());
    for (const auto& c : r) CHECK(c.informational);
    // a failing finding must not gate the run
    CHECK(all_passed(r));
    bool product_form_confirmed = true;
    for (const auto& c : r)
        if (c.name == "a-coefficient product form") product_form_confirmed = c.pass;
    CHECK_FALSE(product_form_confirmed); // known discrepancy, reported with witnesses
}
