#pragma once

#include <functional>
#include <string>
#include <vector>

namespace isingff {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    bool informational = false; // findings: reported, never gate the run
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    int N_min = 1;
    int N_max = 0;     // 0: per-suite default
    int n_min = 1;     // expansion indices to cover where a suite spans several
    int n_max = 4;
    int power_min = 2; // wronskian powers
    int power_max = 4;
    int jobs = 1;
};

// registered suite names, in canonical order
std::vector<std::string> suite_names();

// run one suite (deterministic result order, independent of jobs)
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);

// run several; empty selection means all
std::vector<CheckResult> run_suites(const std::vector<std::string>& suites,
                                    const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace isingff
