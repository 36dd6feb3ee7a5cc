// Acceptance gate: one line per criterion, nonzero exit on any failure.
// The checks live in the library's verify registry so the CLI's `verify
// acceptance` scope runs exactly the same code.

#include <cstdio>

#include "lwz/verify.hpp"

int main() {
    const lwz::verify::SuiteResult r = lwz::verify::run_suite("acceptance");
    for (const auto& c : r.cases) {
        std::printf("%s  %-28s  measured %.3e  tolerance %.3e%s%s\n",
                    c.passed ? "pass" : "FAIL", c.id.c_str(), c.measured,
                    c.tolerance, c.note.empty() ? "" : "  ",
                    c.note.c_str());
    }
    std::printf("%d passed, %d failed\n", r.passed, r.failed);
    return r.failed == 0 ? 0 : 1;
}
