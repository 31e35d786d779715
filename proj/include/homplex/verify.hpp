#pragma once

#include "homplex/json_io.hpp"

#include <string>
#include <vector>

namespace homplex {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    Json measured;
    Json expected;
    std::string note;
    double seconds = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    // Skipped checks do not count.
    bool passed() const;
    Json to_json(bool timings = false) const;
};

struct VerifyOptions {
    int max_size = 6;   // largest h in the exhaustive graph sweeps
    int jobs = 1;       // worker threads; results do not depend on it
    int samples = 200;  // random (G, H) pairs in the slice sweep
    unsigned seed = 20240611;
};

// Suites: examples, dissections, slice, polytopality, skeleton, table, ic_delta,
// dimension, duality, staircase. "all" runs them in that order.
std::vector<std::string> suite_names();
std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& opt = {});

}  // namespace homplex
