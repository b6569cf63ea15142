#pragma once

#include "isingff/diffop.hpp"
#include "isingff/series.hpp"

#include <string>

namespace isingff {

// Catalog of the named operators of the factorization. N ranges are checked;
// the J4 intertwiners exist only for the listed N.
//
//   O2(N)        order 2, annihilates u1(N), u2(N)
//   L2(N)        order 2, annihilates the one-fold form factor; t^(N/2+1)-conjugate of O2
//   L4(N), Q(N), R(N)   the order-4 homomorphism chain: L4 Q = R Sym^3(L2)
//   Omega2_m(N)  order-3 operators of the quadratic layer (m = 0, 1, 2)
//   Omega3_3(N)  order-5 operator of the cubic layer
//   I1(N)        order-1 intertwiner mapping solutions of O2 to its partner
//   J3_0, J3_2, G3_0, G3_2(N)  intertwiners of the cubic-layer homomorphisms
//   J4_0, J4_1(N in 2..5), J4_2(N = 2)  intertwiners of the quartic layer
DiffOp build_named(const std::string& name, int N);

// inhomogeneity of the Omega2_m(N) equation, as an exact series
Series omega2_rhs(int m, int N, int order);
// inhomogeneity of the Omega3_3(N) equation
Series omega33_rhs(int N, int order);

// right-hand sides of the first-order coupled system for the quadratic layer
// (rows match omega2 equations after decoupling; exposed for the residual suite)
struct CoupledQuadratic {
    // row i: sum_m (a[i][m] C_m + b[i][m] C_m') = rhs[i]
    RatFunc a[3][3], b[3][3];
    Series rhs(int row, int order) const;
    int N = 0;
};
CoupledQuadratic coupled_quadratic(int N);

// the four coupled equations of the cubic layer: entries are operators acting
// on (C_0, C_1, C_2, C_3), rhs exact series
struct CoupledCubic {
    DiffOp op[4][4];
    Series rhs(int row, int order) const;
    int N = 0;
};
CoupledCubic coupled_cubic(int N);

} // namespace isingff
