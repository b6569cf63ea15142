#include "isingff/seq.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace isingff {

namespace {

std::mutex g_mutex;
std::map<std::pair<int, int>, Rational> g_a, g_b;
std::map<int, Rational> g_lambda;

// Gamma(x) for positive integer or half-integer x, tracked as r * sqrt(pi)^s.
struct GammaVal {
    Rational r;
    int sqrt_pi;
};

GammaVal gamma_half(const Rational& x) {
    if (x <= 0) throw std::domain_error("gamma argument must be positive");
    if (x.get_den() == 1) {
        long n = to_long(x);
        Rational f(1);
        for (long i = 2; i < n; ++i) f *= i;
        return {f, 0};
    }
    if (x.get_den() != 2) throw std::domain_error("gamma argument must be integer or half-integer");
    Rational k = x - Rational(1, 2);
    return {pochhammer(Rational(1, 2), to_long(k)), 1};
}

GammaVal operator*(const GammaVal& a, const GammaVal& b) {
    return {a.r * b.r, a.sqrt_pi + b.sqrt_pi};
}
GammaVal operator/(const GammaVal& a, const GammaVal& b) {
    return {a.r / b.r, a.sqrt_pi - b.sqrt_pi};
}

} // namespace

Rational pochhammer(const Rational& x, long n) {
    if (n < 0) throw std::domain_error("pochhammer with negative length");
    Rational r(1), v(x);
    for (long i = 0; i < n; ++i) {
        r *= v;
        v += 1;
    }
    return r;
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (long i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

Rational lambda_coeff(int N) {
    if (N < 0) throw std::domain_error("lambda_N needs N >= 0");
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_lambda.find(N);
    if (it != g_lambda.end()) return it->second;
    Rational v = pochhammer(Rational(1, 2), N);
    for (long i = 2; i <= N; ++i) v /= i;
    g_lambda.emplace(N, v);
    return v;
}

Rational beta_coeff(int N) {
    if (N < 1) throw std::domain_error("beta_N needs N >= 1");
    return Rational((2L * N + 1) * (2L * N + 1), 4L * N * (N + 1));
}

Rational a_coeff(int N, int n) {
    if (n == 0) return Rational(1);
    if (n < 0 || n > N - 1)
        throw std::domain_error("a_n(N) defined for 0 <= n <= N-1 only");
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        auto it = g_a.find({N, n});
        if (it != g_a.end()) return it->second;
    }
    Rational v = pochhammer(Rational(1, 2), n) * pochhammer(Rational(1, 2) - N, n) /
                 (pochhammer(Rational(1 - N), n) * pochhammer(Rational(1), n));
    std::lock_guard<std::mutex> lock(g_mutex);
    g_a.emplace(std::make_pair(N, n), v);
    return v;
}

Rational b_coeff(int N, int n) {
    if (N < 0 || n < 0) throw std::domain_error("b_n(N) needs N, n >= 0");
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        auto it = g_b.find({N, n});
        if (it != g_b.end()) return it->second;
    }
    Rational v = pochhammer(Rational(1, 2), n) * pochhammer(Rational(1, 2) + N, n) /
                 (pochhammer(Rational(N + 1), n) * pochhammer(Rational(1), n));
    std::lock_guard<std::mutex> lock(g_mutex);
    g_b.emplace(std::make_pair(N, n), v);
    return v;
}

Rational harmonic_partial(const Rational& z, int n) {
    if (n < 0) throw std::domain_error("harmonic partial sum with negative length");
    Rational s(0);
    for (int k = 0; k < n; ++k) s += Rational(1) / (z + k);
    return s;
}

Rational k_coeff(int N, int n) {
    if (N < 0 || n < 0) throw std::domain_error("k_n needs N, n >= 0");
    return harmonic_partial(Rational(1), n) + harmonic_partial(Rational(1), n + N) -
           harmonic_partial(Rational(1, 2), n) - harmonic_partial(Rational(1, 2), n + N);
}

std::pair<Rational, Rational> structure_constants(int N) {
    return {lambda_coeff(N), beta_coeff(N)};
}

SelbergLeading selberg_leading(int nfold, int N) {
    if (nfold < 2) throw std::domain_error("selberg_leading needs nfold >= 2");
    auto half = Rational(1, 2);
    if (nfold % 2 == 0) {
        int n = nfold / 2;
        GammaVal acc{Rational(1), -4 * n}; // 1 / pi^(2n)
        for (long i = 2; i <= n; ++i) acc.r /= Rational(i * i);
        acc = acc * gamma_half(Rational(N + n) + half) * gamma_half(Rational(n) + half);
        acc = acc / gamma_half(Rational(N) + half) / gamma_half(half);
        for (int j = 0; j < n; ++j) {
            GammaVal br = gamma_half(Rational(N + j) + half) * gamma_half(Rational(j) + half) *
                          gamma_half(Rational(j + 2)) / gamma_half(Rational(N + n + j + 1));
            acc = acc * br * br;
        }
        if (acc.sqrt_pi != 0) throw std::logic_error("pi powers did not cancel");
        return {Rational(static_cast<long>(n) * (N + n)), acc.r};
    }
    int n = (nfold - 1) / 2;
    GammaVal acc{Rational(1), -2 * (2 * n + 1)};
    for (long i = 2; i <= n; ++i) acc.r /= Rational(i);
    acc = acc * gamma_half(Rational(N) + half) * gamma_half(half) / gamma_half(Rational(N + n + 1));
    for (int j = 0; j < n; ++j) {
        GammaVal br = gamma_half(Rational(N + j + 1) + half) * gamma_half(Rational(j + 1) + half) *
                      gamma_half(Rational(j + 2)) / gamma_half(Rational(N + n + j + 2));
        acc = acc * br * br;
    }
    if (acc.sqrt_pi != 0) throw std::logic_error("pi powers did not cancel");
    return {Rational(N) * (Rational(n) + half) + Rational(static_cast<long>(n) * (n + 1)), acc.r};
}

void clear_seq_caches() {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_a.clear();
    g_b.clear();
    g_lambda.clear();
}

} // namespace isingff
