// Command line surface: emit factorized tables, print exact series, and run
// the verification suites. Exit codes: 0 pass, 1 check failure, 2 usage.

#include "isingff/fixtures.hpp"
#include "isingff/named_ops.hpp"
#include "isingff/formfactor.hpp"
#include "isingff/hyper.hpp"
#include "isingff/jsonio.hpp"
#include "isingff/latex.hpp"
#include "isingff/oracle.hpp"
#include "isingff/seq.hpp"
#include "isingff/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace isingff;

int parse_range(const std::string& s, int& lo, int& hi) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(s);
        } else {
            lo = std::stoi(s.substr(0, dots));
            hi = std::stoi(s.substr(dots + 2));
        }
    } catch (...) {
        return 1;
    }
    return lo > hi;
}

FormFactorExpr build_expr(int n, int N) {
    switch (n) {
        case 2: return make_f2(N);
        case 3: return make_f3(N);
        case 4: return make_f4(N).expr;
        default: throw std::domain_error("constructive tables exist for n = 2, 3, 4");
    }
}

int cmd_table(int n, int N, const std::string& format) {
    if (n < 2 || n > 4) {
        std::cerr << "table: n must be 2, 3, or 4 (n = 5 rows are reference-only)\n";
        return 2;
    }
    if (N < 0) {
        std::cerr << "table: N must be nonnegative\n";
        return 2;
    }
    if (N == 0) {
        const FixtureTable* t = find_fixture(n, 0);
        if (!t) {
            std::cerr << "table: no reference entry for N = 0\n";
            return 2;
        }
        if (format == "latex")
            for (const auto& line : latex_fixture(*t)) std::cout << line << "\n";
        else if (format == "json") {
            nlohmann::json j{{"n", n}, {"N", 0}, {"source", "reference"}};
            for (const auto& [m, e] : t->C) j["C"][std::to_string(m)] = to_json(e.value);
            for (const auto& [m, e] : t->K)
                j["K"][std::to_string(m)] = to_string(t->k_value(m));
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& line : latex_fixture(*t)) std::cout << line << "\n";
        }
        return 0;
    }
    FormFactorExpr f = build_expr(n, N);
    if (format == "latex") {
        for (const auto& line : latex_table(f)) std::cout << line << "\n";
    } else if (format == "json") {
        std::cout << to_json(f).dump(2) << "\n";
    } else {
        for (const auto& line : text_table(f)) std::cout << line << "\n";
        if (n == 4 && !find_fixture(4, N))
            std::cout << "  (beyond the reference tables; verified by cancellation"
                         " and the leading-term law)\n";
    }
    return 0;
}

int cmd_series(int n, int N, int order, const std::string& format) {
    if (order == 0) order = 2 * N + 12; // default working truncation
    if (order < 1) {
        std::cerr << "series: order must be positive\n";
        return 2;
    }
    Series s;
    if (n >= 1 && n <= 4 && N >= 1) {
        s = (n == 1) ? F_series(N, order) * lambda_coeff(N) : assemble(n, N, order);
    } else if (N == 0 && n >= 1 && n <= 4) {
        s = (n == 4) ? oracle_f4(0, order) : oracle_f(n, 0, order);
    } else {
        std::cerr << "series: supported range is n = 1..4, N >= 0\n";
        return 2;
    }
    if (format == "json") {
        nlohmann::json j = to_json(s);
        j["n"] = n;
        j["N"] = N;
        j["normalized"] = (n % 2 != 0);
        if (!s.is_zero()) {
            j["leading"] = {{"exponent", s.valuation()},
                            {"coefficient", to_string(s.at(s.valuation()))}};
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (n % 2 != 0 && N > 0)
        std::cout << "f(" << n << ")[N=" << N << "] / t^(N/2), exact series:\n";
    else
        std::cout << "f(" << n << ")[N=" << N << "], exact series:\n";
    bool first = true;
    for (int k = s.valuation(); k < s.order(); ++k) {
        Rational c = s.at(k);
        if (c == 0) continue;
        if (first)
            std::cout << "  " << to_string(c) << " t^" << k << "   <- leading term\n";
        else
            std::cout << "  " << (c > 0 ? "+ " : "- ") << to_string(c > 0 ? c : Rational(-c))
                      << " t^" << k << "\n";
        first = false;
    }
    std::cout << "  + O(t^" << s.order() << ")\n";
    return 0;
}

int cmd_operator(const std::string& name, int N, const std::string& format) {
    DiffOp op = build_named(name, N);
    if (format == "json") {
        nlohmann::json j = to_json(op);
        j["name"] = name;
        j["N"] = N;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << name << "(N=" << N << "), order " << op.order() << ":\n";
    for (int k = 0; k <= op.order(); ++k) {
        RatFunc c = op.coeff(k);
        std::cout << "  D^" << k << " : ";
        if (c.is_zero()) {
            std::cout << "0\n";
            continue;
        }
        auto put = [](const Poly& p) {
            std::string s;
            for (int i = p.degree(); i >= 0; --i) {
                Rational v = p.at(i);
                if (v == 0) continue;
                bool neg = v < 0;
                if (neg) v = Rational(0) - v;
                s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
                if (v != 1 || i == 0) s += to_string(v);
                if (i == 1) s += (v == 1 ? "t" : " t");
                if (i > 1) s += (v == 1 ? "t^" : " t^") + std::to_string(i);
            }
            return s.empty() ? std::string("0") : s;
        };
        std::cout << "(" << put(c.num()) << ")";
        if (c.den().degree() > 0 || c.den().at(0) != 1) std::cout << " / (" << put(c.den()) << ")";
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& Nrange, const std::string& nrange,
               const std::string& Prange, int jobs, const std::string& format) {
    VerifyOptions opts;
    opts.jobs = jobs;
    if (!Nrange.empty()) {
        if (parse_range(Nrange, opts.N_min, opts.N_max)) {
            std::cerr << "verify: bad N range '" << Nrange << "'\n";
            return 2;
        }
    }
    if (!nrange.empty()) {
        if (parse_range(nrange, opts.n_min, opts.n_max) || opts.n_min < 1) {
            std::cerr << "verify: bad n range '" << nrange << "'\n";
            return 2;
        }
    }
    if (!Prange.empty()) {
        if (parse_range(Prange, opts.power_min, opts.power_max) || opts.power_min < 1) {
            std::cerr << "verify: bad power range '" << Prange << "'\n";
            return 2;
        }
    }
    std::vector<std::string> which;
    if (suite != "all") {
        auto names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end()) {
            std::cerr << "verify: unknown suite '" << suite << "' (have:";
            for (const auto& n : names) std::cerr << " " << n;
            std::cerr << ")\n";
            return 2;
        }
        which.push_back(suite);
    }
    auto t0 = std::chrono::steady_clock::now();
    auto results = run_suites(which, opts);
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : results)
            j.push_back({{"suite", r.suite},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"informational", r.informational},
                         {"detail", r.detail},
                         {"seconds", r.seconds}});
        std::cout << j.dump(2) << "\n";
    } else {
        int passed = 0, failed = 0;
        for (const auto& r : results) {
            const char* tag = r.informational ? (r.pass ? "NOTE" : "NOTE") : (r.pass ? "PASS" : "FAIL");
            std::printf("[%s] %s / %s: %s (%.2fs)\n", tag, r.suite.c_str(), r.name.c_str(),
                        r.detail.c_str(), r.seconds);
            if (r.informational) continue;
            (r.pass ? passed : failed)++;
        }
        std::printf("%d passed, %d failed, %.1fs total\n", passed, failed, total);
    }
    return all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact factorized form factors of the diagonal Ising correlation"};
    app.require_subcommand(1);

    int n = 2, N = 1, order = 0, jobs = 1;
    std::string format = "text", suite = "all", Nrange, Prange, nrange;

    auto* table = app.add_subcommand("table", "print the factorized expression for one (n, N)");
    table->add_option("n", n, "expansion index (2, 3, or 4)")->required();
    table->add_option("N", N, "diagonal site separation")->required();
    table->add_option("--format", format, "text | json | latex");

    auto* series = app.add_subcommand("series", "print the exact series of f(n) at one N");
    series->add_option("n", n, "expansion index (1..4)")->required();
    series->add_option("N", N, "diagonal site separation")->required();
    series->add_option("order", order, "truncation order");
    series->add_option("--format", format, "text | json");

    std::string opname = "O2";
    auto* oper = app.add_subcommand("operator", "dump a catalogued differential operator");
    oper->add_option("name", opname, "O2 L2 L4 Q R Omega2_0 Omega2_1 Omega2_2 Omega3_3 I1 J3_0 J3_2 G3_0 G3_2 J4_0 J4_1 J4_2")->required();
    oper->add_option("N", N, "diagonal site separation")->required();
    oper->add_option("--format", format, "text | json");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite,--suite", suite, "suite name or 'all'");
    verify->add_option("--N", Nrange, "N range, e.g. 1..6");
    verify->add_option("--n", nrange, "expansion-index range, e.g. 2..3");
    verify->add_option("--power", Prange, "power range for the identity powers, e.g. 2..4");
    verify->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "text | json");

    // honored for parity with the library caches; nothing is written unless set
    const char* cache = std::getenv("ISINGFF_CACHE_DIR");
    if (cache && *cache) std::filesystem::create_directories(cache);

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) return cmd_table(n, N, format);
        if (series->parsed()) return cmd_series(n, N, order, format);
        if (oper->parsed()) return cmd_operator(opname, N, format);
        if (verify->parsed()) return cmd_verify(suite, Nrange, nrange, Prange, jobs, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
