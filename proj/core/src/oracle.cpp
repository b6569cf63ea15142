#include "isingff/oracle.hpp"

#include "isingff/jsonio.hpp"
#include "isingff/seq.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace isingff {

namespace {

struct GammaVal {
    Rational r;
    int sqrt_pi;
};

GammaVal gamma_exact(const Rational& x) {
    if (x <= 0) throw std::domain_error("gamma argument must be positive");
    if (x.get_den() == 1) {
        long n = to_long(x);
        Rational f(1);
        for (long i = 2; i < n; ++i) f *= i;
        return {f, 0};
    }
    if (x.get_den() != 2)
        throw std::domain_error("gamma argument must be integer or half-integer");
    return {pochhammer(Rational(1, 2), to_long(x - Rational(1, 2))), 1};
}

std::mutex g_mutex;
std::map<std::pair<MomentKey, int>, Series> g_moments;

// binomial(eps, r) (-1)^r, the coefficient of (tx)^r in (1-tx)^eps
Rational binom_alt(const Rational& eps, int r) {
    Rational c(1);
    for (int i = 0; i < r; ++i) c *= (eps - i);
    for (int i = 1; i <= r; ++i) c /= i;
    return (r % 2 == 0) ? c : -c;
}

} // namespace

Rational beta_half(const Rational& a, const Rational& b) {
    GammaVal ga = gamma_exact(a), gb = gamma_exact(b), gab = gamma_exact(a + b);
    int piw = ga.sqrt_pi + gb.sqrt_pi - gab.sqrt_pi;
    if (piw != 2)
        throw std::domain_error("moment pattern does not produce a single pi factor");
    return ga.r * gb.r / gab.r;
}

Series moment_series(const MomentKey& key, int order) {
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        auto it = g_moments.find({key, order});
        if (it != g_moments.end()) return it->second;
    }
    std::vector<Rational> c(order > 0 ? order : 0);
    for (int r = 0; r < order; ++r)
        c[r] = binom_alt(key.eps, r) * beta_half(key.power + r + 1, key.eps + 1);
    Series s(0, std::move(c), order);
    std::lock_guard<std::mutex> lock(g_mutex);
    g_moments.emplace(std::make_pair(key, order), s);
    return s;
}

namespace {

Series moment(const Rational& power, const Rational& eps, int order) {
    return moment_series({power, eps}, order);
}

const Rational kHalf(1, 2);

Series oracle_f1(int N, int order) {
    // t^(N/2)-normalized: (1/pi) integral x^(N-1/2) (1-x)^(-1/2) (1-tx)^(-1/2)
    return moment(Rational(N) - kHalf, -kHalf, order);
}

Series oracle_f2(int N, int order) {
    // t^(N+1) / pi^2 * [y: x^(N+1/2), eps -1/2] [z: x^(N-1/2), eps +1/2] (1-tyz)^-2
    int jmax = order - (N + 1);
    std::vector<Rational> c(jmax > 0 ? jmax : 0);
    for (int m = 0; m < jmax; ++m) {
        Series my = moment(Rational(N) + kHalf + m, -kHalf, jmax - m);
        Series mz = moment(Rational(N) - kHalf + m, kHalf, jmax - m);
        for (int r = 0; r < jmax - m; ++r) {
            Rational yr = my.at(r);
            if (yr == 0) continue;
            for (int s = 0; s + r + m < jmax; ++s)
                c[m + r + s] += Rational(m + 1) * yr * mz.at(s);
        }
    }
    return Series(N + 1, std::move(c), order);
}

Series oracle_f3(int N, int order) {
    // normalized lead t^(N+2); two (-1/2)-type variables with x^(N-1/2),
    // one (+1/2)-type with x^(N+1/2); couplings (1-t y_i z)^-2; (y1-y2)^2; /2
    int jmax = order - (N + 2);
    std::vector<Rational> c(jmax > 0 ? jmax : 0);
    static const int vdm[3][2] = {{2, 0}, {1, 1}, {0, 2}};
    static const long vdmc[3] = {1, -2, 1};
    for (int m1 = 0; m1 < jmax; ++m1)
        for (int m2 = 0; m1 + m2 < jmax; ++m2) {
            Rational coup((m1 + 1L) * (m2 + 1));
            int rem = jmax - m1 - m2;
            for (int v = 0; v < 3; ++v) {
                Series my1 = moment(Rational(N) - kHalf + m1 + vdm[v][0], -kHalf, rem);
                Series my2 = moment(Rational(N) - kHalf + m2 + vdm[v][1], -kHalf, rem);
                Series mz = moment(Rational(N) + kHalf + m1 + m2, kHalf, rem);
                Rational pre = coup * vdmc[v] / 2;
                for (int r1 = 0; r1 < rem; ++r1) {
                    Rational a1 = my1.at(r1);
                    if (a1 == 0) continue;
                    for (int r2 = 0; r1 + r2 < rem; ++r2) {
                        Rational a2 = my2.at(r2);
                        if (a2 == 0) continue;
                        Rational a12 = pre * a1 * a2;
                        for (int s = 0; r1 + r2 + s < rem; ++s)
                            c[m1 + m2 + r1 + r2 + s] += a12 * mz.at(s);
                    }
                }
            }
        }
    return Series(N + 2, std::move(c), order);
}

// Optional on-disk cache for the heavier expansions, keyed by (n, N, order).
// Enabled by pointing ISINGFF_CACHE_DIR at a writable directory.
std::optional<std::filesystem::path> cache_path(int n, int N, int order) {
    const char* dir = std::getenv("ISINGFF_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    return std::filesystem::path(dir) / ("oracle-n" + std::to_string(n) + "-N" +
                                         std::to_string(N) + "-o" + std::to_string(order) +
                                         ".json");
}

std::optional<Series> cache_load(int n, int N, int order) {
    auto path = cache_path(n, N, order);
    if (!path) return std::nullopt;
    std::ifstream in(*path);
    if (!in) return std::nullopt;
    try {
        nlohmann::json j;
        in >> j;
        return series_from_json(j);
    } catch (...) {
        return std::nullopt; // stale or foreign file; recompute
    }
}

void cache_store(int n, int N, int order, const Series& s) {
    auto path = cache_path(n, N, order);
    if (!path) return;
    std::error_code ec;
    std::filesystem::create_directories(path->parent_path(), ec);
    std::ofstream out(*path);
    if (out) out << to_json(s);
}

} // namespace

Series oracle_f(int n, int N, int order) {
    if (auto hit = cache_load(n, N, order)) return *hit;
    Series s;
    switch (n) {
        case 1: s = oracle_f1(N, order); break;
        case 2: s = oracle_f2(N, order); break;
        case 3: s = oracle_f3(N, order); break;
        default: throw std::invalid_argument("oracle_f supports n = 1, 2, 3");
    }
    cache_store(n, N, order, s);
    return s;
}

Series oracle_f4(int N, int order) {
    if (auto hit = cache_load(4, N, order)) return *hit;
    // lead t^(2(N+2)); y1,y2 of (-1/2) type with x^(N+1/2), z1,z2 of (+1/2)
    // type with x^(N-1/2); four couplings; (y1-y2)^2 (z1-z2)^2; /4
    int jmax = order - 2 * (N + 2);
    std::vector<Rational> c(jmax > 0 ? jmax : 0);
    static const int vdm[3][2] = {{2, 0}, {1, 1}, {0, 2}};
    static const long vdmc[3] = {1, -2, 1};
    for (int m11 = 0; m11 < jmax; ++m11)
     for (int m12 = 0; m11 + m12 < jmax; ++m12)
      for (int m21 = 0; m11 + m12 + m21 < jmax; ++m21)
       for (int m22 = 0; m11 + m12 + m21 + m22 < jmax; ++m22) {
           int mm = m11 + m12 + m21 + m22;
           int rem = jmax - mm;
           Rational coup((m11 + 1L) * (m12 + 1) * (m21 + 1L) * (m22 + 1));
           int ry1 = m11 + m12, ry2 = m21 + m22;
           int rz1 = m11 + m21, rz2 = m12 + m22;
           for (int vy = 0; vy < 3; ++vy)
            for (int vz = 0; vz < 3; ++vz) {
                Series my1 = moment(Rational(N) + kHalf + ry1 + vdm[vy][0], -kHalf, rem);
                Series my2 = moment(Rational(N) + kHalf + ry2 + vdm[vy][1], -kHalf, rem);
                Series mz1 = moment(Rational(N) - kHalf + rz1 + vdm[vz][0], kHalf, rem);
                Series mz2 = moment(Rational(N) - kHalf + rz2 + vdm[vz][1], kHalf, rem);
                Rational pre = coup * vdmc[vy] * vdmc[vz] / 4;
                for (int r1 = 0; r1 < rem; ++r1) {
                    Rational a1 = my1.at(r1) * pre;
                    if (a1 == 0) continue;
                    for (int r2 = 0; r1 + r2 < rem; ++r2) {
                        Rational a2 = my2.at(r2) * a1;
                        if (a2 == 0) continue;
                        for (int s1 = 0; r1 + r2 + s1 < rem; ++s1) {
                            Rational a3 = mz1.at(s1) * a2;
                            if (a3 == 0) continue;
                            for (int s2 = 0; r1 + r2 + s1 + s2 < rem; ++s2)
                                c[mm + r1 + r2 + s1 + s2] += a3 * mz2.at(s2);
                        }
                    }
                }
            }
       }
    Series s(2 * (N + 2), std::move(c), order);
    cache_store(4, N, order, s);
    return s;
}

void clear_oracle_cache() {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_moments.clear();
}

} // namespace isingff
