#pragma once

// Named self-check suites, one per module plus the top-level acceptance
// bundle.  Each case reports a measured value against a tolerance; the JSON
// rendering is what `lwz verify` prints and the acceptance runner reuses
// the same registry.

#include <string>
#include <vector>

namespace lwz::verify {

struct CaseResult {
    std::string id;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string note; // failure detail when a case threw
};

struct SuiteResult {
    std::string suite;
    int passed = 0;
    int failed = 0;
    std::vector<CaseResult> cases;
};

/// Suite names in execution order; "all" is accepted as well.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all".  Failures are data, not
/// exceptions; only an unknown scope throws (Validation).
SuiteResult run_suite(const std::string& scope);

/// {"suite", "passed", "failed", "cases": [{"id", "status", "measured",
/// "tolerance"}]} with stable field order and fixed float formatting.
std::string to_json(const SuiteResult& r);

} // namespace lwz::verify
