#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace romanovski {

struct CaseFailure {
    std::string case_id;
    std::string detail;   // residual or delta
    std::string context;  // parameter values
};

struct SuiteReport {
    std::string suite;
    long cases_run = 0;
    std::vector<CaseFailure> failures;
    std::vector<std::string> notes;  // informational, never failures
    double wall_seconds = 0.0;

    bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
    unsigned max_degree = 8;
    unsigned trials = 10;
    std::uint64_t seed = 1;
    unsigned workers = 0;  // 0: ROMANOVSKI_WORKERS env var, else hardware count
};

/// Names accepted by run_suites, excluding "all".
const std::vector<std::string>& suite_names();

/// Runs one named suite ("all" expands to every suite) deterministically
/// for the given seed; trials fan out across workers and reports merge in
/// trial order. Throws std::invalid_argument for an unknown name.
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& options);

/// Deterministic rendering (no wall time); one line per failure and note.
void print_report(std::ostream& os, const SuiteReport& report);

}  // namespace romanovski
