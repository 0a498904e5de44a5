#pragma once

#include <string>
#include <vector>

#include "twisted/group_model.hpp"

namespace twisted {

enum class CheckLevel { fast, exhaustive };

// One verification suite's outcome. A skipped suite counts as passed and
// carries the reason in note. failures holds the first few counterexamples
// in canonical (w, u, ...) order; checks counts every comparison made.
struct SuiteResult {
    std::string name;
    bool passed = true;
    bool skipped = false;
    long long checks = 0;
    long long failed = 0;
    std::vector<std::string> failures;
    std::string note;
};

inline constexpr int kMaxReportedFailures = 10;

// edges, mobius, qsum, equivalences, epsilon, oracle — in that order.
const std::vector<std::string>& suite_names();

// Runs one suite on the model. Unknown name -> invalid_argument. A suite
// that cannot run on this model at all propagates unsupported_model_error /
// capacity_error (run_all_suites converts those into skips instead).
SuiteResult run_suite(const GroupContext& ctx, const std::string& name, CheckLevel level);

std::vector<SuiteResult> run_all_suites(const GroupContext& ctx, CheckLevel level);

bool all_passed(const std::vector<SuiteResult>& results);

// "suite <name>: PASS (N checks)" per line, counterexamples indented under
// failing suites, and a final summary line. Byte-deterministic.
std::string format_results(const std::vector<SuiteResult>& results);

}  // namespace twisted
