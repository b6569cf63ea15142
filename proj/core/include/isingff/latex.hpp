#pragma once

#include "isingff/fixtures.hpp"
#include "isingff/formfactor.hpp"

#include <string>
#include <vector>

namespace isingff {

// LaTeX rendering of a factorized table. When a verified reference entry is
// available its printed factorization (prime powers, (t+1) splits) is reused;
// otherwise the constructed polynomial is factored canonically (content,
// t^m, (t+1)^k, plain integer core).
std::vector<std::string> latex_table(const FormFactorExpr& f);
std::vector<std::string> latex_fixture(const FixtureTable& t);

// plain-text rendering of the same content
std::vector<std::string> text_table(const FormFactorExpr& f);

} // namespace isingff
