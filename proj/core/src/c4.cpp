#include "isingff/formfactor.hpp"
#include "isingff/hyper.hpp"
#include "isingff/seq.hpp"

#include <array>
#include <stdexcept>

namespace isingff {

namespace {

// the truncated quartic-layer expressions, affine in the overall scale kbar:
// value = P_m + kbar * Q_m, each a log series whose log channels must cancel
// through the stated order
struct AffineExpr {
    LogSeries p, q;
    int stated; // coefficients are trusted through t^stated
};

std::array<AffineExpr, 5> quartic_exprs(int N, int order) {
    Rational b = beta_coeff(N);
    Rational L = Rational(N) * lambda_coeff(N) * lambda_coeff(N) / 3;
    LogSeries u2N = u2_logseries(N, order);
    LogSeries u2N1 = u2_logseries(N + 1, order);
    Series C0 = Series::from_poly(C2_poly(N, 0).poly, order);
    Series C1 = Series::from_poly(C2_poly(N, 1).poly, order);
    Series C2 = Series::from_poly(C2_poly(N, 2).poly, order);
    Series F = F_series(N, order);
    Series F1 = F_series(N + 1, order);
    Series tN1 = Series::monomial(N + 1, Rational(1), order);
    Series tN2 = Series::monomial(N + 2, Rational(1), order);

    LogSeries u2N1_2 = u2N1 * u2N1;
    LogSeries u2N1_3 = u2N1_2 * u2N1;
    LogSeries u2N1_4 = u2N1_3 * u2N1;
    LogSeries u2N_2 = u2N * u2N;
    LogSeries u2N_3 = u2N_2 * u2N;
    LogSeries u2N_4 = u2N_3 * u2N;

    std::array<AffineExpr, 5> e;

    e[0].q = -(u2N1_4.shifted(-4)) - (u2N1_2 * C0).shifted(-2) * Rational(4, N);
    e[0].p = ((u2N1_2 * C0).shifted(-2) - (u2N1_2 * u2N * C0 * F1).shifted(-2) * (b * 2) -
              (u2N1_3 * C1 * F1).shifted(-3)) *
                 Rational(2, 3) +
             (u2N1_3 * F1 * tN2).shifted(-4) * (L * b);
    e[0].stated = 2 * N + 1;

    e[1].q = (u2N1_3 * u2N).shifted(-3) * (b * 4) +
             ((u2N1 * u2N * C0).shifted(-1) * (b * 2) - (u2N1_2 * C1).shifted(-2)) * Rational(4, N);
    e[1].p = ((u2N1 * u2N_2 * C0 * F1).shifted(-1) * (b * b * 6) +
              (u2N1_3 * C1 * F).shifted(-3) * Rational(2) -
              (u2N1_3 * C2 * F1).shifted(-3) * Rational(2)) *
                 Rational(2, 3) -
             ((u2N1_3 * F * tN1).shifted(-3) * b +
              (u2N1_2 * u2N * F1 * tN2).shifted(-3) * (b * b * 3)) *
                 L;
    e[1].stated = 2 * N + 1;

    LogSeries bracket = (u2N_2 * C0) * (b * b) - (u2N1 * u2N * C1).shifted(-1) * (b * 2) +
                        (u2N1_2 * C2).shifted(-2);
    e[2].q = -(u2N1_2 * u2N_2).shifted(-2) * (b * b * 6) - bracket * Rational(4, N);
    e[2].p = -(bracket * Rational(2)) +
             ((u2N_3 * C0 * F1) * (-(b * b * b * 6)) - (u2N1 * u2N * C1).shifted(-1) * (b * 9) +
              (u2N1_3 * C2 * F).shifted(-3) * Rational(6)) *
                 Rational(2, 3) +
             ((u2N1_2 * u2N * F * tN1).shifted(-2) * (b * b * 3) +
              (u2N1 * u2N_2 * F1 * tN2).shifted(-2) * (b * b * b * 3)) *
                 L;
    e[2].stated = 2 * N + 1; // center coefficient at 2N+2 is solved for

    e[3].q = (u2N1 * u2N_3).shifted(-1) * (b * b * b * 4) -
             ((u2N_2 * C1) * (b * b) - (u2N1 * u2N * C2).shifted(-1) * (b * 2)) * Rational(4, N);
    e[3].p = ((u2N_3 * C0 * F) * (b * b * b * 2) - (u2N_3 * C1 * F1) * (b * b * b * 2) -
              (u2N1_2 * u2N * C2 * F).shifted(-2) * (b * 6)) *
                 Rational(2, 3) -
             ((u2N1 * u2N_2 * F * tN1).shifted(-1) * (b * b * b * 3) +
              (u2N_3 * F1 * tN2).shifted(-1) * (b * b * b * b)) *
                 L;
    e[3].stated = 2 * N + 2;

    e[4].q = -(u2N_4 * (b * b * b * b)) - (u2N_2 * C2) * (Rational(4, N) * b * b);
    e[4].p = ((u2N_3 * C1 * F) * (b * b * b) +
              (u2N1 * u2N_2 * C2 * F).shifted(-1) * (b * b * 2) + (u2N_2 * C2) * (b * b)) *
                 Rational(2, 3) +
             (u2N_3 * F * tN1) * (b * b * b * b * L);
    e[4].stated = 2 * N + 3;

    return e;
}

struct AffineCoeff {
    Rational c, kbar, mu;
};

} // namespace

QuarticSolve make_f4(int N) {
    if (N < 1) throw std::domain_error("quartic layer needs N >= 1");
    const int deg = 4 * N + 2;
    const int order = deg + 6;
    auto exprs = quartic_exprs(N, order);

    // polynomial coefficient lists, affine in (kbar, mu)
    std::array<std::vector<AffineCoeff>, 5> polys;
    for (int m = 0; m <= 4; ++m) {
        const auto& e = exprs[m];
        for (const auto* part : {&e.p, &e.q}) {
            for (int k = 1; k < part->channels(); ++k)
                if (!part->channel(k).truncated(e.stated + 1).is_zero())
                    throw std::logic_error("quartic expression has uncancelled log terms");
        }
        auto& co = polys[m];
        co.resize(deg + 1);
        for (int j = m; j <= e.stated; ++j)
            co[j] = {e.p.analytic().at(j), e.q.analytic().at(j), Rational(0)};
        for (int j = deg; j > e.stated; --j) {
            if (m == 2 && j == 2 * N + 2) {
                co[j] = {Rational(0), Rational(0), Rational(1)};
                continue;
            }
            int r = deg + m - j;
            if (r < 0 || r > e.stated) throw std::logic_error("palindromy completion out of range");
            co[j] = co[r];
        }
    }

    // rows t^0 .. t^(2N+3) of K0 + K1 f2 + sum_m C_m F^(4-m) F1^m must vanish
    Series f2 = assemble(2, N, order);
    Series F = F_series(N, order);
    Series F1 = F_series(N + 1, order);
    std::array<Series, 5> w;
    for (int m = 0; m <= 4; ++m) {
        Series s = Series::one(order);
        for (int i = 0; i < 4 - m; ++i) s = s * F;
        for (int i = 0; i < m; ++i) s = s * F1;
        w[m] = s;
    }
    // unknowns x = (kbar, mu, K0, K1); row: a + b.kbar + c.mu + d.K0 + e.K1 = 0
    struct Row {
        Rational a, b, c, d, e;
    };
    std::vector<Row> rows;
    for (int k = 0; k <= 2 * N + 3; ++k) {
        Row r{Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)};
        for (int m = 0; m <= 4; ++m)
            for (int j = m; j <= std::min(k, deg); ++j) {
                Rational wk = w[m].at(k - j);
                if (wk == 0) continue;
                r.a += polys[m][j].c * wk;
                r.b += polys[m][j].kbar * wk;
                r.c += polys[m][j].mu * wk;
            }
        if (k == 0) r.d = 1;
        r.e = f2.at(k);
        rows.push_back(std::move(r));
    }
    // exact elimination on the 4 unknowns
    const int nu = 4;
    std::vector<std::array<Rational, 5>> M;
    for (const auto& r : rows) M.push_back({r.b, r.c, r.d, r.e, -r.a});
    std::vector<int> piv;
    int rr = 0;
    for (int c = 0; c < nu; ++c) {
        int p = -1;
        for (int i = rr; i < static_cast<int>(M.size()); ++i)
            if (M[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(M[rr], M[p]);
        Rational lead = M[rr][c];
        for (auto& x : M[rr]) x /= lead;
        for (int i = 0; i < static_cast<int>(M.size()); ++i) {
            if (i == rr || M[i][c] == 0) continue;
            Rational f = M[i][c];
            for (int cc = 0; cc <= nu; ++cc) M[i][cc] -= f * M[rr][cc];
        }
        piv.push_back(c);
        ++rr;
    }
    if (static_cast<int>(piv.size()) != nu)
        throw std::logic_error("quartic linear system is rank deficient");
    for (int i = rr; i < static_cast<int>(M.size()); ++i)
        if (M[i][nu] != 0) throw std::logic_error("quartic linear system is inconsistent");
    std::array<Rational, 4> sol;
    for (int i = 0; i < nu; ++i) sol[piv[i]] = M[i][nu];
    const Rational kbar = sol[0], mu = sol[1], K0 = sol[2], K1 = sol[3];

    QuarticSolve out;
    out.kbar = kbar;
    out.c2_middle = mu;
    out.expr.n = 4;
    out.expr.N = N;
    out.expr.K = {K0, K1};
    for (int m = 0; m <= 4; ++m) {
        std::vector<Rational> c(deg + 1);
        for (int j = 0; j <= deg; ++j)
            c[j] = polys[m][j].c + polys[m][j].kbar * kbar + polys[m][j].mu * mu;
        out.expr.C.emplace_back(Poly(std::move(c)), 2 * (2 * N + 1) + m);
    }
    return out;
}

PalinPoly C4_poly(int N, int m) {
    if (m < 0 || m > 4) throw std::invalid_argument("quartic core index out of range");
    return make_f4(N).expr.C[m];
}

} // namespace isingff
