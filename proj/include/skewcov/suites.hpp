#pragma once

// Verification suites over a workspace: each produces a deterministic text
// report plus a CSV of (case, branch, lhs, rhs, status) rows.

#include "skewcov/workspace.hpp"

namespace skewcov {

struct SuiteRow {
    std::string case_key;
    std::string branch;
    long long lhs = 0, rhs = 0;
    enum Status { Pass, Fail, Inconclusive } status = Pass;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteRow> rows;   // sorted by case key
    size_t passes = 0, failures = 0, inconclusive = 0;

    std::string text() const;
    std::string csv() const;
    int exit_code(bool strict) const;
};

extern const std::vector<std::string> kSuiteNames;

// Throws UnknownSuite for a bad name, ValidationError/ParseError for
// workspace problems a suite cannot run around.
SuiteResult run_suite(const Workspace& ws, const std::string& suite, uint64_t seed, int budget);

} // namespace skewcov
