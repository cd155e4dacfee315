// Acceptance gate: runs every check in the validation suite at the full
// level and prints one pass/fail line per criterion.  Exits nonzero if any
// criterion fails, so it can serve as a ctest entry.
#include "rectwalk/validation.hpp"

#include <cstdio>

int main() {
    const auto results = rectwalk::run_acceptance(rectwalk::ValidationLevel::full);
    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] %-45s %s\n", r.pass ? "pass" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        if (!r.pass) ++failures;
    }
    if (failures == 0) {
        std::printf("all %zu criteria passed\n", results.size());
    } else {
        std::printf("%d of %zu criteria failed\n", failures, results.size());
    }
    return failures == 0 ? 0 : 1;
}
