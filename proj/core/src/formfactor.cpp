#include "isingff/formfactor.hpp"

#include "isingff/hyper.hpp"
#include "isingff/seq.hpp"

#include <stdexcept>

namespace isingff {

Rational amplitude2(int N, int m) {
    Rational sign = (m % 2 == 0) ? Rational(-1) : Rational(1);
    Rational b = beta_coeff(N);
    Rational bp(1);
    for (int i = 0; i < m; ++i) bp *= b;
    return sign * Rational(N, 2) * binomial(2, m) * bp;
}

Rational amplitude3(int N, int m) {
    Rational sign = (m % 2 == 0) ? Rational(-1) : Rational(1);
    Rational b = beta_coeff(N);
    Rational bp(1);
    for (int i = 0; i < m; ++i) bp *= b;
    return sign * Rational(2, 3) * binomial(3, m) * lambda_coeff(N) * bp;
}

namespace {

void check_domain(int N) {
    if (N < 1) throw std::domain_error("constructive layer needs N >= 1");
}

// core coefficients 0..len-1 with the head convolution filling 0..known-1
// and palindromy (c_k = c_(len-1-k)) the rest
std::vector<Rational> complete_core(const Series& conv, int known, int len) {
    std::vector<Rational> c(len);
    for (int k = 0; k < known; ++k) {
        c[k] = conv.at(k);
        c[len - 1 - k] = c[k];
    }
    return c;
}

std::vector<Rational> core2(int N, int m) {
    int order = 2 * N + 4;
    Series hN = u2_head(N, order);
    Series hN1 = u2_head(N + 1, order);
    switch (m) {
        case 2: return complete_core(hN * hN, N, 2 * N);
        case 1: {
            auto c = complete_core(hN * hN1, N, 2 * N + 1);
            c[N] = lambda_coeff(N) * lambda_coeff(N) + (N >= 1 ? core2(N, 2)[N - 1] : Rational(0));
            return c;
        }
        case 0: return complete_core(hN1 * hN1, N + 1, 2 * N + 2);
        default: throw std::invalid_argument("quadratic core index out of range");
    }
}

Poly core_to_poly(const std::vector<Rational>& core, int m, const Rational& amp) {
    std::vector<Rational> c(core.size() + m);
    for (size_t i = 0; i < core.size(); ++i) c[i + m] = amp * core[i];
    return Poly(std::move(c));
}

std::vector<Rational> core3_open(int N, int m); // middle slot of m=1 left at zero

Rational c3_middle(int N) {
    // the single free core coefficient of the cubic layer: chosen so the
    // assembled normalized series vanishes at t^(N+1) as the integral demands
    int order = N + 3;
    Series FN = F_series(N, order);
    Series FN1 = F_series(N + 1, order);
    Series total = FN * (Rational(3 * N + 1, 6) * lambda_coeff(N));
    for (int m = 0; m <= 3; ++m) {
        std::vector<Rational> core = core3_open(N, m);
        Poly c = core_to_poly(core, m, amplitude3(N, m));
        if (m < 3) {
            Poly c2 = core_to_poly(core2(N, m), m, amplitude2(N, m));
            c = c + c2 * (Rational(N - 1, N) * lambda_coeff(N));
        }
        Series w = Series::one(order);
        for (int i = 0; i < 3 - m; ++i) w = w * FN;
        for (int i = 0; i < m; ++i) w = w * FN1;
        total = total + Series::from_poly(c, order) * w;
    }
    // adding x at the unknown slot adds amplitude3(N,1) * x to the t^(N+1) coefficient
    return -total.at(N + 1) / amplitude3(N, 1);
}

std::vector<Rational> core3_open(int N, int m) {
    int order = 2 * N + 6;
    Series hN = u2_head(N, order);
    Series hN1 = u2_head(N + 1, order);
    Series FN = F_series(N, order);
    switch (m) {
        case 3: return complete_core(hN * hN * hN * FN, N, 2 * N - 1);
        case 2: return complete_core(hN * hN * hN1 * FN, N, 2 * N);
        case 1: return complete_core(hN * hN1 * hN1 * FN, N, 2 * N + 1);
        case 0: return complete_core(hN1 * hN1 * hN1 * FN, N + 1, 2 * N + 2);
        default: throw std::invalid_argument("cubic core index out of range");
    }
}

std::vector<Rational> core3(int N, int m) {
    auto c = core3_open(N, m);
    if (m == 1) c[N] = c3_middle(N);
    return c;
}

} // namespace

PalinPoly C2_poly(int N, int m) {
    check_domain(N);
    return PalinPoly(core_to_poly(core2(N, m), m, amplitude2(N, m)), 2 * N + 1 + m);
}

PalinPoly C3_poly(int N, int m) {
    check_domain(N);
    Poly p = core_to_poly(core3(N, m), m, amplitude3(N, m));
    if (m < 3)
        p = p + C2_poly(N, m).poly * (Rational(N - 1, N) * lambda_coeff(N));
    return PalinPoly(std::move(p), 2 * N + 1 + m);
}

FormFactorExpr make_f2(int N) {
    check_domain(N);
    FormFactorExpr f;
    f.n = 2;
    f.N = N;
    f.K = {Rational(N, 2)};
    for (int m = 0; m <= 2; ++m) f.C.push_back(C2_poly(N, m));
    return f;
}

FormFactorExpr make_f3(int N) {
    check_domain(N);
    FormFactorExpr f;
    f.n = 3;
    f.N = N;
    f.K = {Rational(3 * N + 1, 6)};
    for (int m = 0; m <= 3; ++m) f.C.push_back(C3_poly(N, m));
    return f;
}

Series assemble(const FormFactorExpr& f, int order) {
    Series FN = F_series(f.N, order);
    Series FN1 = F_series(f.N + 1, order);
    Series total = Series::zero(order);
    for (size_t m = 0; m < f.K.size(); ++m) {
        if (f.K[m] == 0) continue;
        Series lower;
        if (f.odd())
            lower = (m == 0) ? FN * lambda_coeff(f.N) : assemble(2 * static_cast<int>(m) + 1, f.N, order);
        else
            lower = (m == 0) ? Series::one(order) : assemble(2 * static_cast<int>(m), f.N, order);
        total = total + lower * f.K[m];
    }
    for (size_t m = 0; m < f.C.size(); ++m) {
        Series w = Series::one(order);
        for (size_t i = 0; i < f.C.size() - 1 - m; ++i) w = w * FN;
        for (size_t i = 0; i < m; ++i) w = w * FN1;
        total = total + Series::from_poly(f.C[m].poly, order) * w;
    }
    return total;
}

Series assemble(int n, int N, int order) {
    switch (n) {
        case 2: return assemble(make_f2(N), order);
        case 3: return assemble(make_f3(N), order);
        case 4: return assemble(make_f4(N).expr, order);
        default: throw std::invalid_argument("assemble supports n = 2, 3, 4");
    }
}

Series f2_recursion_series(int N, int order) {
    check_domain(N);
    Series total = assemble(2, 1, order) * Rational(N);
    for (int j = 1; j < N; ++j) {
        // t^(1/2) f1_j f1_(j+1) = lambda_j lambda_(j+1) t^(j+1) F_j F_(j+1)
        Series term = (F_series(j, order) * F_series(j + 1, order)).shifted(j + 1);
        total = total + term * (lambda_coeff(j) * lambda_coeff(j + 1) * Rational(-N, 2) /
                                Rational(static_cast<long>(j) * (j + 1)));
    }
    return total;
}

Series f3_alternative(int N, int order) {
    check_domain(N);
    Series f2 = assemble(2, N, order);
    Series f1n = F_series(N, order) * lambda_coeff(N);
    Series total = (Series::monomial(0, Rational(2, 3), order) + f2 * Rational(N - 1, N)) * f1n;
    Series FN = F_series(N, order);
    Series FN1 = F_series(N + 1, order);
    for (int m = 0; m <= 3; ++m) {
        // bare cubic cores, without the lower-layer admixture
        Poly cbar = core_to_poly(core3(N, m), m, amplitude3(N, m));
        Series w = Series::one(order);
        for (int i = 0; i < 3 - m; ++i) w = w * FN;
        for (int i = 0; i < m; ++i) w = w * FN1;
        total = total + Series::from_poly(cbar, order) * w;
    }
    return total;
}

CancellationReport cancellation_report(int n, int N) {
    CancellationReport r;
    r.n = n;
    r.N = N;
    SelbergLeading lead = selberg_leading(n, N);
    Rational rexp = lead.exponent;
    if (n % 2 != 0) rexp -= Rational(N, 2); // normalized form
    int expect = to_long(rexp);
    r.expected_zero_through = expect - 1;
    Series s = assemble(n, N, expect + 3);
    r.first_nonzero = s.valuation();
    r.leading = s.is_zero() ? Rational(0) : s.at(s.valuation());
    r.pass = (r.first_nonzero == expect) && (r.leading == lead.coefficient);
    return r;
}

} // namespace isingff
