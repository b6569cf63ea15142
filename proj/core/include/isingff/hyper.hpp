#pragma once

#include "isingff/logseries.hpp"
#include "isingff/series.hpp"

namespace isingff {

// F_N = 2F1([1/2, N+1/2]; [N+1]; t); coefficient of t^n is b_n(N)
Series F_series(int N, int order);

// Fbar_N = 2F1([3/2, N+3/2]; [N+2]; t)
Series Fbar_series(int N, int order);

// G_N = 2F1([3/2, N+3/2]; [N+1]; t)
Series G_series(int N, int order);

// u1(N) = t^(N+1) F_N
Series u1_series(int N, int order);

// analytic head of u2 divided by t: sum_{n<N} a_n(N) t^n (exact polynomial)
Series u2_head(int N, int order);

// u2(N) = t sum a_n t^n + t^(N+1) N lambda_N^2 sum b_n (k_n - ln t) t^n, N >= 1.
// Channel 1 is -N lambda_N^2 u1(N).
LogSeries u2_logseries(int N, int order);

// analytic companion: u2 = w2 - N lambda_N^2 u1 ln t
Series w2_series(int N, int order);

// u1(N) u2(N+1) - beta_N u2(N) u1(N+1) - t^(N+2); identically zero in both channels
LogSeries wronskian_residual(int N, int order);

// everything the factorizations consume for one N, at one truncation order
struct BasisBundle {
    int N = 0;
    int order = 0;
    Series F_N, F_N1, Fbar_N, G_N;
    Series u1_N, u1_N1;
    LogSeries u2_N, u2_N1;
};

BasisBundle make_basis(int N, int order);

} // namespace isingff
