#pragma once

#include "isingff/poly.hpp"
#include "isingff/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace isingff {

// Reference tables for the factorized form factors, stored monomial by
// monomial in a plain-text format that keeps the printed factorizations
// (prime-power prefactors, (t+1) factors, palindromic cores) readable.
//
//   table <n> <N>
//   K <m> <sign> <prefactor>
//   C <m> <sign> <prefactor> <factor> ...
//   end
//
// prefactor: products of prime powers, e.g. 3^2/2^5, 1/2*3, 7/8, 1
// factor:    t, t^k, (t+1), (1+t), (t+1)^k, or {a,b,...} with descending
//            coefficients, each spelled as an integer or prime-power product

struct FixtureFactor {
    enum Kind { Monomial, OnePlusT, Core } kind = Monomial;
    int power = 1;                     // t^power or (t+1)^power
    bool t_first = true;               // (t+1) vs (1+t) spelling
    std::vector<std::string> spellings; // descending, Core only
    Poly value;
};

struct FixtureEntry {
    int m = 0;
    int sign = 1;
    std::string prefactor_spelling;
    Rational prefactor;
    std::vector<FixtureFactor> factors;
    Poly value; // sign * prefactor * product of factors
};

struct FixtureTable {
    int n = 0;
    int N = 0;
    std::map<int, FixtureEntry> K; // m -> coefficient of the lower-order term
    std::map<int, FixtureEntry> C; // m -> coefficient of F_N^(n-m) F_(N+1)^m
    Rational k_value(int m) const;
    Poly c_value(int m) const; // zero polynomial if absent
};

// the embedded corpus (human-auditable text)
const std::string& fixtures_text();

// parse a corpus; throws with a line diagnostic on malformed input
std::vector<FixtureTable> parse_fixtures(const std::string& text);

// the parsed embedded corpus, cached
const std::vector<FixtureTable>& fixtures();

const FixtureTable* find_fixture(int n, int N);

// evaluate a fixture row as an exact series (odd rows are normalized);
// lower-order terms resolve recursively through the corpus
Series fixture_series(const FixtureTable& t, int order);

// structural self-checks on one table: palindromic cores, degree law
void validate_fixture(const FixtureTable& t);

} // namespace isingff
