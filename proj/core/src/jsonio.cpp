#include "isingff/jsonio.hpp"

namespace isingff {

using nlohmann::json;

json to_json(const Rational& r) { return to_string(r); }

json to_json(const Series& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
    return {{"valuation", s.valuation()}, {"order", s.order()}, {"coeffs", coeffs}};
}

json to_json(const Poly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return {{"valuation", 0}, {"order", p.degree() + 1}, {"coeffs", coeffs}};
}

json to_json(const RatFunc& r) {
    return {{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

json to_json(const DiffOp& op) {
    json coeffs = json::array();
    for (const auto& c : op.coeffs()) coeffs.push_back(to_json(c));
    return {{"order", op.order()}, {"coeffs", coeffs}};
}

json to_json(const FormFactorExpr& f) {
    json k = json::array();
    for (const auto& v : f.K) k.push_back(to_string(v));
    json c = json::array();
    for (const auto& p : f.C)
        c.push_back({{"center", p.center}, {"poly", to_json(p.poly)}});
    return {{"n", f.n}, {"N", f.N}, {"normalized", f.odd()}, {"K", k}, {"C", c}};
}

Rational rational_from_json(const json& j) { return rat_from_string(j.get<std::string>()); }

Series series_from_json(const json& j) {
    std::vector<Rational> c;
    for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
    return Series(j.at("valuation").get<int>(), std::move(c), j.at("order").get<int>());
}

Poly poly_from_json(const json& j) {
    int val = j.at("valuation").get<int>();
    std::vector<Rational> c(val);
    for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
    return Poly(std::move(c));
}

} // namespace isingff
