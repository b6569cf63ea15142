#pragma once

#include "isingff/diffop.hpp"
#include "isingff/formfactor.hpp"
#include "isingff/series.hpp"

#include <json.hpp>

namespace isingff {

// JSON forms: rationals as "num/den" strings, series and polynomials as
// {valuation, order, coeffs}; lossless round trips.

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Series& s);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const RatFunc& r);
nlohmann::json to_json(const DiffOp& op);
nlohmann::json to_json(const FormFactorExpr& f);

Rational rational_from_json(const nlohmann::json& j);
Series series_from_json(const nlohmann::json& j);
Poly poly_from_json(const nlohmann::json& j);

} // namespace isingff
