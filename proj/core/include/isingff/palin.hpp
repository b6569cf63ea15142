#pragma once

#include "isingff/poly.hpp"

#include <stdexcept>

namespace isingff {

// t^d * p(1/t). The reflection center d must cover deg(p).
inline Poly palin_reflect(const Poly& p, int d) {
    if (p.degree() > d) throw std::invalid_argument("reflection center below degree");
    return p.reflected(d);
}

// Polynomial together with its claimed palindromy center: P(t) = t^d P(1/t).
struct PalinPoly {
    Poly poly;
    int center = 0;

    PalinPoly() = default;
    PalinPoly(Poly p, int d) : poly(std::move(p)), center(d) {
        if (!poly.is_palindromic(center))
            throw std::invalid_argument("polynomial is not palindromic about the declared center");
    }
};

} // namespace isingff
