#include "isingff/hyper.hpp"

#include "isingff/seq.hpp"

#include <stdexcept>

namespace isingff {

Series F_series(int N, int order) {
    std::vector<Rational> c(order > 0 ? order : 0);
    for (int n = 0; n < order; ++n) c[n] = b_coeff(N, n);
    return Series(0, std::move(c), order);
}

namespace {

// raw 2F1([a1,a2];[b1];t) coefficients
Series hyp2f1(const Rational& a1, const Rational& a2, const Rational& b1, int order) {
    std::vector<Rational> c(order > 0 ? order : 0);
    if (order > 0) c[0] = 1;
    Rational cur(1);
    for (int n = 1; n < order; ++n) {
        cur *= (a1 + (n - 1)) * (a2 + (n - 1)) / ((b1 + (n - 1)) * Rational(n));
        c[n] = cur;
    }
    return Series(0, std::move(c), order);
}

} // namespace

Series Fbar_series(int N, int order) {
    return hyp2f1(Rational(3, 2), Rational(N) + Rational(3, 2), Rational(N + 2), order);
}

Series G_series(int N, int order) {
    return hyp2f1(Rational(3, 2), Rational(N) + Rational(3, 2), Rational(N + 1), order);
}

Series u1_series(int N, int order) { return F_series(N, order - N - 1).shifted(N + 1); }

Series u2_head(int N, int order) {
    std::vector<Rational> c(std::min(N, order > 0 ? order : 0));
    for (int n = 0; n < static_cast<int>(c.size()); ++n) c[n] = a_coeff(N, n);
    return Series(0, std::move(c), order);
}

LogSeries u2_logseries(int N, int order) {
    if (N < 1) throw std::domain_error("u2 is built for N >= 1");
    Rational amp = Rational(N) * lambda_coeff(N) * lambda_coeff(N);
    Series head = u2_head(N, order).shifted(1).truncated(order);
    std::vector<Rational> tail(order > N + 1 ? order - N - 1 : 0);
    for (int n = 0; n < static_cast<int>(tail.size()); ++n)
        tail[n] = amp * b_coeff(N, n) * k_coeff(N, n);
    Series analytic = head + Series(N + 1, std::move(tail), order);
    Series logpart = u1_series(N, order) * (-amp);
    return LogSeries(std::move(analytic), std::move(logpart));
}

Series w2_series(int N, int order) { return u2_logseries(N, order).analytic(); }

LogSeries wronskian_residual(int N, int order) {
    LogSeries lhs = u2_logseries(N + 1, order) * u1_series(N, order) -
                    u2_logseries(N, order) * u1_series(N + 1, order) * beta_coeff(N);
    return lhs - LogSeries(Series::monomial(N + 2, Rational(1), lhs.order()));
}

BasisBundle make_basis(int N, int order) {
    BasisBundle b;
    b.N = N;
    b.order = order;
    b.F_N = F_series(N, order);
    b.F_N1 = F_series(N + 1, order);
    b.Fbar_N = Fbar_series(N, order);
    b.G_N = G_series(N, order);
    b.u1_N = u1_series(N, order);
    b.u1_N1 = u1_series(N + 1, order);
    b.u2_N = u2_logseries(N, order);
    b.u2_N1 = u2_logseries(N + 1, order);
    return b;
}

} // namespace isingff
