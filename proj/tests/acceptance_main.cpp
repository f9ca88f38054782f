// Acceptance runner: executes the full verification suite and prints one
// pass/fail line per criterion. Exit status is nonzero if any check fails.

#include <cstdio>

#include "qec/verification.hpp"

int main() {
    const auto results = qec::run_acceptance_checks();
    int failed = 0;
    for (const auto& r : results) {
        std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        if (!r.pass) ++failed;
    }
    std::printf("%d/%zu checks passed\n", static_cast<int>(results.size()) - failed,
                results.size());
    return failed == 0 ? 0 : 1;
}
