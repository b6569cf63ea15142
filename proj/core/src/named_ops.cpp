#include "isingff/named_ops.hpp"

#include "isingff/seq.hpp"

#include <stdexcept>

namespace isingff {

namespace {

Poly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    v.reserve(c.size());
    for (long x : c) v.emplace_back(x);
    return Poly(std::move(v));
}

RatFunc rf(Poly num, Poly den) { return RatFunc(std::move(num), std::move(den)); }

Poly t_pow(int k) { return Poly::monomial(k, Rational(1)); }

DiffOp o2(int N) {
    // D^2 - (1+N-Nt)/(t(1-t)) D + (4+4N-t-2Nt)/(4 t^2 (1-t))
    Poly t1mt = P({0, 1, -1});       // t(1-t)
    Poly t21mt = P({0, 0, 1, -1});   // t^2(1-t)
    return DiffOp({rf(P({4 + 4L * N, -1 - 2L * N}), t21mt * Rational(4)),
                   rf(P({-(1 + N), N}), t1mt), RatFunc::constant(Rational(1))});
}

DiffOp l2(int N) {
    // D^2 + (2t-1)/((t-1)t) D - 1/(4t) + 1/(4(t-1)) - N^2/(4 t^2)
    long n2 = static_cast<long>(N) * N;
    Poly den0 = P({0, 0, -1, 1}) * Rational(4); // 4 t^2 (t-1)
    Poly num0 = P({0, 1}) * -P({-1, 1}) + P({0, 0, 1}) + P({-1, 1}) * Rational(-n2);
    return DiffOp({rf(num0, den0), rf(P({-1, 2}), P({0, -1, 1})),
                   RatFunc::constant(Rational(1))});
}

DiffOp l4(int N) {
    Rational n2(static_cast<long>(N) * N);
    Rational n4 = n2 * n2;
    Poly t = t_pow(1), t2 = t_pow(2), t3 = t_pow(3), t4 = t_pow(4);
    Poly tm1 = P({-1, 1});
    Poly tm1_2 = tm1 * tm1, tm1_3 = tm1_2 * tm1;
    RatFunc co0 = rf(P({-1, 5}) * P({-4, 5}) * Rational(81, 16), t3 * tm1_3) +
                  rf(P({8, -17}) * (n2 * Rational(9, 8)), tm1 * t4) +
                  rf(Poly::constant(n4 * Rational(9, 16)), t4);
    RatFunc co1 = rf(P({-1, 2}) * P({9, -122, 122}), tm1_3 * t3) +
                  rf(P({23, -32}) * (n2 / 2), tm1 * t3);
    RatFunc co2 = rf(P({46, -241, 241}) * Rational(1, 2), tm1_2 * t2) +
                  rf(Poly::constant(-Rational(5, 2) * n2), t2);
    RatFunc co3 = rf(P({-1, 2}) * Rational(10), tm1 * t);
    return DiffOp({co0, co1, co2, co3, RatFunc::constant(Rational(1))});
}

DiffOp q_op(int N) {
    Rational n2(static_cast<long>(N) * N);
    Poly t = t_pow(1), tm1 = P({-1, 1});
    RatFunc co0 = rf(P({-1, 2}) * Rational(9, 8), tm1 * t) +
                  rf(P({-1, 2}) * (-Rational(9, 8) * n2), t_pow(2));
    RatFunc co1 = rf(P({6, -41, 41}) * Rational(1, 4), tm1 * t) +
                  rf(tm1 * (-Rational(9, 4) * n2), t);
    return DiffOp({co0, co1, RatFunc::from_poly(P({-1, 2}) * Rational(7, 2)),
                   RatFunc::from_poly(tm1 * t)});
}

DiffOp r_op(int N) {
    Rational n2(static_cast<long>(N) * N);
    Poly t = t_pow(1), tm1 = P({-1, 1});
    RatFunc co0 = rf(P({-1, 2}) * P({16, -125, 125}) * Rational(9, 8), tm1 * tm1 * t_pow(2)) +
                  rf(P({-9, 10}) * (-Rational(9, 8) * n2), t_pow(2));
    RatFunc co1 = rf(P({6, -29, 29}) * Rational(21, 4), tm1 * t) +
                  rf(tm1 * (-Rational(9, 4) * n2), t);
    return DiffOp({co0, co1, RatFunc::from_poly(P({-1, 2}) * Rational(23, 2)),
                   RatFunc::from_poly(tm1 * t)});
}

DiffOp omega2_0(int N) {
    long n = N;
    return DiffOp::from_polys({
        P({-2 * n - 1, 2 * n}) * Rational(2 * n + 1),
        P({n + 2 * n * n, 1 + 4 * n - 4 * n * n, -(5 * n - 2 * n * n)}) * Rational(2),
        t_pow(1) * P({n, -(n - 1)}) * P({1, -1}) * Rational(-6),
        t_pow(2) * P({1, -1}) * P({1, -1}) * Rational(2),
    });
}

DiffOp omega2_1(int N) {
    long n = N;
    return DiffOp::from_polys({
        -P({4 + 8 * n + 4 * n * n, 5 + 6 * n, -(5 + 10 * n + 4 * n * n)}),
        t_pow(1) * P({2 + 4 * n + 2 * n * n, 3 + 4 * n - 2 * n * n, -(3 + 8 * n + 2 * n * n), 2 * n * n}) * Rational(2),
        t_pow(2) * P({1, -1}) * P({1 + 3 * n, 4, 1 - 3 * n}) * Rational(-2),
        t_pow(3) * P({1, -1}) * P({1, -1}) * P({1, 1}) * Rational(2),
    });
}

DiffOp omega2_2(int N) {
    long n = N;
    return DiffOp::from_polys({
        -P({16 + 24 * n + 8 * n * n, -(15 + 28 * n + 12 * n * n), 2 + 6 * n + 4 * n * n}),
        t_pow(1) * P({7 + 9 * n + 2 * n * n, -(7 + 12 * n + 4 * n * n), 1 + 3 * n + 2 * n * n}) * Rational(2),
        t_pow(2) * P({1 + n, -n}) * P({1, -1}) * Rational(-6),
        t_pow(3) * P({1, -1}) * P({1, -1}) * Rational(2),
    });
}

DiffOp omega3_3(int N) {
    long n = N;
    Poly c0 = (Poly::monomial(4, Rational(2 * (n - 1) * (2 * n + 1) * (3 * n + 1) * (n + 1))) +
               Poly::monomial(3, Rational(-(2 * n + 3) * (36 * n * n * n - 7 * n * n - 69 * n - 32))) +
               Poly::monomial(2, Rational(4 * (n + 2) * (36 * n * n * n - 10 * n * n - 116 * n - 69))) +
               Poly::monomial(1, Rational(-(2 * n + 5) * (60 * n * n * n - 23 * n * n - 275 * n - 188))) +
               Poly::constant(Rational(18 * (2 * n + 3) * (n + 3) * (n - 3) * (n + 1)))) *
              Rational(4);
    Poly c1 = t_pow(1) *
              ((Poly::monomial(4, Rational((n - 1) * (2 * n + 1) * (3 * n + 1) * (n + 1))) +
                Poly::monomial(3, Rational(-(24 * n * n * n * n + 40 * n * n * n - 73 * n * n - 130 * n - 47))) +
                Poly::monomial(2, Rational(2 * (18 * n * n * n * n + 45 * n * n * n - 113 * n * n - 270 * n - 129))) +
                Poly::monomial(1, Rational(-(24 * n * n * n * n + 80 * n * n * n - 253 * n * n - 740 * n - 422))) +
                Poly::constant(Rational((n + 1) * (6 * n * n * n + 19 * n * n - 114 * n - 211)))) *
               Rational(-8));
    Poly c2core = Poly::monomial(3, Rational(2 * n * (n - 1) * (n + 1))) +
                  Poly::monomial(2, Rational(-3 * (2 * n * n * n - 4 * n * n - 8 * n - 3))) +
                  Poly::monomial(1, Rational(3 * (2 * n * n * n - 8 * n * n - 24 * n - 13))) +
                  Poly::constant(Rational(-2 * (n - 9) * (n + 2) * (n + 1)));
    Poly tm1 = P({-1, 1});
    Poly c2 = t_pow(2) * tm1 * c2core * Rational(20);
    Poly c3core = Poly::monomial(2, Rational((n - 1) * (n - 1))) +
                  Poly::monomial(1, Rational(-(2 * n * n + 4 * n + 1))) +
                  Poly::constant(Rational((n + 5) * (n + 1)));
    Poly c3 = t_pow(3) * tm1 * tm1 * c3core * Rational(40);
    Poly c4 = t_pow(4) * tm1 * tm1 * tm1 * P({-n - 1, n - 1}) * Rational(-40);
    Poly c5 = t_pow(5) * tm1 * tm1 * tm1 * tm1 * Rational(8);
    return DiffOp::from_polys({c0, c1, c2, c3, c4, c5});
}

DiffOp i1_op(int N) {
    // (1/t) D - (t-2)/(2 t^2 (t-1)) - N/(2 t^2)
    RatFunc co0 = rf(-P({-2, 1}), P({0, 0, -1, 1}) * Rational(2)) +
                  rf(Poly::constant(Rational(-N)), t_pow(2) * Rational(2));
    return DiffOp({co0, rf(Poly::constant(Rational(1)), t_pow(1))});
}

DiffOp j3_0(int N) {
    // t^(N+1) ((t-1) t D - 2(N t + N + 1))
    Poly pre = t_pow(N + 1);
    return DiffOp({RatFunc::from_poly(pre * P({-2L * N - 2, -2L * N})),
                   RatFunc::from_poly(pre * P({0, -1, 1}))});
}

DiffOp j3_2(int N) {
    // t^(N+2) ((t-1) t D + 2(N+1) t + 2N)
    Poly pre = t_pow(N + 2);
    return DiffOp({RatFunc::from_poly(pre * P({2L * N, 2L * N + 2})),
                   RatFunc::from_poly(pre * P({0, -1, 1}))});
}

DiffOp g3_0(int N) {
    // t^(N+1) (t-1) t (D - dlog(R_B)),
    // R_B = (t+1)(t-1)^(4N-3) t^-(2N+6) P,  P = (4N+3)(3N+2)(t^2+1) + 2(20N^2+15N+2) t
    Poly pre = t_pow(N + 1) * P({0, -1, 1});
    Poly pp = P({1, 0, 1}) * Rational((4L * N + 3) * (3L * N + 2)) +
              P({0, 1}) * Rational(2 * (20L * N * N + 15 * N + 2));
    Poly den = P({1, 1}) * pp;
    Poly dnum = P({0, -1, 1}) * pp                          // (t-1)t/(t+1) -> *(t+1)P
                + P({0, 1}) * den * Rational(4L * N - 3)    // (4N-3)t
                + P({-1, 1}) * den * Rational(-(2L * N + 6)) // -(2N+6)(t-1)
                + P({0, -1, 1}) * pp.derivative() * P({1, 1});
    return DiffOp({rf(t_pow(N + 1) * -dnum, den), RatFunc::from_poly(pre)});
}

DiffOp g3_2(int N) {
    // t^(N+2) (t-1) t (D - dlog(R_B at -(N+1)))
    // R_B(-(N+1)) = (t+1)(t-1)^(-4N-7) t^(2N-4) P,  P = (4N+1)(3N+1)(t^2+1) + 2(20N^2+25N+7) t
    Poly pre = t_pow(N + 2) * P({0, -1, 1});
    Poly pp = P({1, 0, 1}) * Rational((4L * N + 1) * (3L * N + 1)) +
              P({0, 1}) * Rational(2 * (20L * N * N + 25 * N + 7));
    Poly den = P({1, 1}) * pp;
    Poly dnum = P({0, -1, 1}) * pp                                     // (t-1)t/(t+1): *(t+1)P -> (t-1)t P
                + P({0, 1}) * den * Rational(-4L * N - 7)              // (-4N-7)t
                + P({-1, 1}) * den * Rational(2L * N - 4)              // (2N-4)(t-1)
                + P({0, -1, 1}) * pp.derivative() * P({1, 1});         // (t-1)t P'/P
    return DiffOp({rf(t_pow(N + 2) * -dnum, den), RatFunc::from_poly(pre)});
}

Poly j4_0_poly(int N) {
    switch (N) {
        case 2: return t_pow(2) * P({1, 1}) * P({2, 1, 2});
        case 3: return t_pow(2) * P({1, 1}) * P({64, 16, 99, 16, 64});
        case 4: return t_pow(2) * P({1, 1}) * P({576, 96, 730, 425, 730, 96, 576});
        case 5:
            return t_pow(2) * P({1, 1}) *
                   P({16384, 2048, 19264, 6608, 28861, 6608, 19264, 2048, 16384});
        default: throw std::domain_error("J4_0 catalogued for N = 2..5 only");
    }
}

DiffOp j4_1(int N) {
    // c t^p J4_1 = (t-1) J4_0 D - 2 t q(t)
    long c;
    int p;
    Poly q;
    switch (N) {
        case 2: c = 2; p = 3; q = P({-4, -5, 0, 2, 10}); break;
        case 3: c = 64; p = 4; q = P({-128, -112, -220, 0, 95, 32, 448}); break;
        case 4: c = 576; p = 5; q = P({-1152, -864, -1288, -2471, 0, 1148, 406, 192, 5184}); break;
        case 5:
            c = 16384; p = 6;
            q = P({-32768, -22528, -29952, -44112, -83454, 0, 41307, 15168, 7488, 4096, 180224});
            break;
        default: throw std::domain_error("J4_1 catalogued for N = 2..5 only");
    }
    Poly den = t_pow(p) * Rational(c);
    return DiffOp({rf(P({0, 1}) * q * Rational(-2), den),
                   rf(P({-1, 1}) * j4_0_poly(N), den)});
}

DiffOp j4_2(int N) {
    if (N != 2) throw std::domain_error("J4_2 catalogued for N = 2 only");
    // 16 t^6 J4_2 = 8 (t-1)^2 J4_0 D^2 - t(t-1)(432 t^4 + 80 t^3 - 99 t^2 - 240 t - 208) D
    //             + 3 (1040 t^5 - 1176 t^4 - 233 t^3 - 100 t^2 + 168 t + 256)
    Poly den = t_pow(6) * Rational(16);
    Poly tm1 = P({-1, 1});
    return DiffOp({rf(P({256, 168, -100, -233, -1176, 1040}) * Rational(3), den),
                   rf(P({0, 1}) * tm1 * P({-208, -240, -99, 80, 432}) * Rational(-1), den),
                   rf(tm1 * tm1 * j4_0_poly(2) * Rational(8), den)});
}

} // namespace

DiffOp build_named(const std::string& name, int N) {
    if (name == "O2") return o2(N);
    if (name == "L2") return l2(N);
    if (name == "L4") return l4(N);
    if (name == "Q") return q_op(N);
    if (name == "R") return r_op(N);
    if (name == "Omega2_0") return omega2_0(N);
    if (name == "Omega2_1") return omega2_1(N);
    if (name == "Omega2_2") return omega2_2(N);
    if (name == "Omega3_3") return omega3_3(N);
    if (name == "I1") return i1_op(N);
    if (name == "J3_0") return j3_0(N);
    if (name == "J3_2") return j3_2(N);
    if (name == "G3_0") return g3_0(N);
    if (name == "G3_2") return g3_2(N);
    if (name == "J4_0") return DiffOp::mul_by(j4_0_poly(N));
    if (name == "J4_1") return j4_1(N);
    if (name == "J4_2") return j4_2(N);
    throw std::invalid_argument("unknown operator name: " + name);
}

Series omega2_rhs(int m, int N, int order) {
    Rational lam2 = lambda_coeff(N) * lambda_coeff(N);
    switch (m) {
        case 0: {
            Rational c = Rational(static_cast<long>(N) * (N + 1) * (2 * N + 1) * (2 * N + 1), 2) * lam2;
            return Series(N, {c, -c}, order);
        }
        case 1: {
            // ((2N+1)^2 / (4(N+1))) lam^2 (1-t) t^(N+1) ((4N+1) t - 2 N^2 (N+1) (t+1)^2)
            Rational c = Rational((2L * N + 1) * (2 * N + 1), 4L * (N + 1)) * lam2;
            Poly inner = Poly({Rational(1), Rational(2), Rational(1)}) *
                             Rational(-2L * N * N * (N + 1)) +
                         Poly::monomial(1, Rational(4L * N + 1));
            Poly full = inner * Poly({Rational(1), Rational(-1)}) * c;
            return Series::from_poly(full, order - N - 1).shifted(N + 1);
        }
        case 2: {
            Rational c = Rational(static_cast<long>(N) * N) *
                         Rational((2L * N + 1) * (2 * N + 1) * (2 * N + 1) * (2 * N + 1)) * lam2 /
                         Rational(8L * (N + 1) * (N + 1));
            return Series(N + 2, {c, -c}, order);
        }
        default: throw std::invalid_argument("omega2_rhs: m must be 0, 1, or 2");
    }
}

Series omega33_rhs(int N, int order) {
    // -3 N^2 (2N+1)^6 / (N+1)^3 * B0 * (t^2 - 1) * t^(N+3)
    Rational lam = lambda_coeff(N);
    Rational B0 = lam * lam * lam / 3;
    Rational w(2L * N + 1);
    Rational c = Rational(-3L * N * N) * w * w * w * w * w * w * B0 /
                 (Rational(N + 1L) * Rational(N + 1L) * Rational(N + 1L));
    return Series(N + 3, {-c, Rational(0), c}, order);
}

Series CoupledQuadratic::rhs(int row, int order) const {
    int n = N;
    Rational lam2 = lambda_coeff(n) * lambda_coeff(n);
    switch (row) {
        case 0:
            return Series(n, {Rational(2L * n + 1, 4) * lam2}, order);
        case 1: {
            Rational c = Rational(2L * n + 1, 4L * (n + 1)) * lam2;
            return Series(n, {-Rational(n) * c, Rational(n + 1L) * c}, order);
        }
        case 2: {
            Rational c = -Rational((2L * n + 1) * (2 * n + 1), 16L * (n + 1) * (n + 1)) * lam2;
            return Series(n + 1, {c, -c}, order);
        }
        default: throw std::invalid_argument("coupled quadratic row out of range");
    }
}

CoupledQuadratic coupled_quadratic(int N) {
    CoupledQuadratic sys;
    sys.N = N;
    long n = N;
    Poly t = t_pow(1);
    Poly one = Poly::constant(Rational(1));
    Poly tm1q = P({1, -1}); // (1-t)
    auto& a = sys.a;
    auto& b = sys.b;
    // row 0
    b[0][0] = RatFunc::constant(Rational(1));
    a[0][1] = rf(Poly::constant(Rational(-(n + 1))), t * Rational(2 * n + 1));
    b[0][1] = RatFunc::constant(Rational(2 * (n + 1), 2 * n + 1));
    a[0][2] = rf(Poly::constant(Rational(-4 * (n + 1) * (n + 1))), t * Rational((2 * n + 1) * (2 * n + 1)));
    b[0][2] = RatFunc::constant(Rational(4 * (n + 1) * (n + 1), (2 * n + 1) * (2 * n + 1)));
    // row 1
    a[1][0] = RatFunc::constant(Rational(2 * n + 1, 2 * (n + 1)));
    a[1][1] = rf(t * (Rational(1) + Rational(1, 2 * n + 1)) + P({1 + n, -(2 + n)}) * Rational(1, 2 * n + 1), t);
    b[1][1] = RatFunc::from_poly(tm1q * Rational(-1, 2 * n + 1));
    a[1][2] = rf(P({3 + 2 * n, -2}) * Rational(2 * (n + 1), (2 * n + 1) * (2 * n + 1)), t);
    b[1][2] = RatFunc::from_poly(tm1q * Rational(-4 * (n + 1), (2 * n + 1) * (2 * n + 1)));
    // row 2
    a[2][1] = RatFunc::from_poly(tm1q * Rational(-1, 4 * (n + 1)));
    a[2][2] = rf(P({2 + 2 * n, -1}) * tm1q * Rational(-1, (2 * n + 1) * (2 * n + 1)), t);
    b[2][2] = RatFunc::from_poly(tm1q * tm1q * Rational(1, (2 * n + 1) * (2 * n + 1)));
    return sys;
}

Series CoupledCubic::rhs(int row, int order) const {
    int n = N;
    Rational lam = lambda_coeff(n);
    Rational B0 = lam * lam * lam / 3;
    switch (row) {
        case 0:
            // (3/4) N (2N+1) B0 t^(N-1)
            return Series(n - 1, {Rational(3, 4) * Rational(n) * Rational(2L * n + 1) * B0}, order);
        case 1: {
            // (3/2) B0 t^(N-1) ((2N^2+4N+1) t - 2N - 2N^2)
            Rational c = Rational(3, 2) * B0;
            return Series(n - 1, {c * Rational(-2L * n - 2L * n * n), c * Rational(2L * n * n + 4 * n + 1)}, order);
        }
        case 2:
            return Series(n + 1, {Rational(3, 4) * Rational((2L * n + 1) * (2 * n + 1), n + 1) * B0}, order);
        case 3: {
            // 3 B0 t^N (3N(t-1) + 2t - 1)
            Rational c = Rational(3) * B0;
            return Series(n, {c * Rational(-3L * n - 1), c * Rational(3L * n + 2)}, order);
        }
        default: throw std::invalid_argument("coupled cubic row out of range");
    }
}

CoupledCubic coupled_cubic(int N) {
    CoupledCubic sys;
    sys.N = N;
    long n = N;
    Poly t = t_pow(1), t2 = t_pow(2);
    Poly tm1 = P({-1, 1});
    Rational w(2 * n + 1);
    Rational u(n + 1);
    auto D0 = [&](RatFunc r) { return DiffOp({r}); };
    auto D1 = [&](RatFunc r0, RatFunc r1) { return DiffOp({r0, r1}); };
    auto D2 = [&](RatFunc r0, RatFunc r1, RatFunc r2) { return DiffOp({r0, r1, r2}); };
    // row 0
    sys.op[0][0] = D2(rf(Poly::constant(-w), tm1 * t * Rational(2)),
                      rf(P({-(n + 1), n + 2}), tm1 * t), RatFunc::constant(Rational(1)));
    sys.op[0][1] = D2(rf(P({1, 2 * n + 1}) * (-u), t2 * tm1 * w),
                      rf(P({-n, n + 1}) * (u * 2), t * tm1 * w),
                      RatFunc::constant(u * 2 / w));
    sys.op[0][2] = D2(rf(P({3, 2 * n}) * (u * u * -2), t2 * tm1 * w * w),
                      rf(P({1 - n, n}) * (u * u * 4), t * tm1 * w * w),
                      RatFunc::constant(u * u * 4 / (w * w)));
    sys.op[0][3] = D2(rf(P({3, n - 1}) * (u * u * u * -8), t2 * tm1 * (w * w * w)),
                      rf(P({2 - n, n - 1}) * (u * u * u * 8), t * tm1 * (w * w * w)),
                      RatFunc::constant(u * u * u * 8 / (w * w * w)));
    // row 1
    sys.op[1][0] = D1(RatFunc(), RatFunc::constant(Rational(6)));
    sys.op[1][1] = D2(rf(P({2 * n + 2, 6 * n + 3}) * (u * -2), t2 * (w * w)),
                      rf(P({n + 1, 5 * n + 3}) * (u * 4), t * (w * w)),
                      RatFunc::from_poly(tm1 * (u * 4 / (w * w))));
    sys.op[1][2] = D2(rf(P({4 * n + 5, 4 * n + 1}) * (u * u * -8), t2 * (w * w * w)),
                      rf(P({2 * n + 4, 4 * n + 1}) * (u * u * 8), t * (w * w * w)),
                      RatFunc::from_poly(tm1 * (u * u * 16 / (w * w * w))));
    sys.op[1][3] = D2(rf(P({6 * n + 9, 2 * n - 2}) * (u * u * u * -24), t2 * (w * w * w * w)),
                      rf(P({n + 3, n - 1}) * (u * u * u * 48), t * (w * w * w * w)),
                      RatFunc::from_poly(tm1 * (u * u * u * 48 / (w * w * w * w))));
    // row 2
    sys.op[2][0] = DiffOp();
    sys.op[2][1] = D0(RatFunc::constant(Rational(1)));
    sys.op[2][2] = D1(rf(P({2 * n + 2, -1}) * (u * 4), t * (w * w)),
                      RatFunc::from_poly(tm1 * (u * 4 / (w * w))));
    sys.op[2][3] = D2(
        rf(P({12 * n * n + 30 * n + 18, -16 * n - 17, -2 * n + 2}) * (u * u * 4), t2 * (w * w * w * w)),
        rf(tm1 * P({5 * n + 5, n - 1}) * (u * u * 8), t * (w * w * w * w)),
        RatFunc::from_poly(tm1 * tm1 * (u * u * 8 / (w * w * w * w))));
    // row 3
    sys.op[3][0] = D0(RatFunc::constant(Rational(6)));
    sys.op[3][1] = D1(rf(P({4 * n + 4, 2 * n - 1}) * (u * 4), t * (w * w)),
                      RatFunc::from_poly(tm1 * (u * 16 / (w * w))));
    sys.op[3][2] = D2(
        rf(P({4 * n * n + 12 * n + 8, 8 * n * n + 10 * n - 1, -10 * n - 4}) * (u * u * 8),
           t2 * (w * w * w * w)),
        rf(tm1 * P({3 * n + 3, 5 * n + 2}) * (u * u * 16), t * (w * w * w * w)),
        RatFunc::from_poly(tm1 * tm1 * (u * u * 16 / (w * w * w * w))));
    sys.op[3][3] = D2(
        rf(P({4 * n * n + 16 * n + 13, -10 * n - 14, -2 * n + 2}) * (u * u * u * 48),
           t2 * (w * w * w * w * w)),
        rf(tm1 * P({3 * n + 4, n - 1}) * (u * u * u * 96), t * (w * w * w * w * w)),
        RatFunc::from_poly(tm1 * tm1 * (u * u * u * 96 / (w * w * w * w * w))));
    return sys;
}

} // namespace isingff
