#pragma once

#include <string>
#include <vector>

namespace rectwalk {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

enum class ValidationLevel { quick, full };

// Runs the full acceptance suite, one CheckResult per criterion.  The quick
// level skips lattice grids with interior height above 79; full solves the
// height-159 grids as well.  A criterion that throws is reported as a
// failure carrying the exception message, never as a crash.
std::vector<CheckResult> run_acceptance(ValidationLevel level);

} // namespace rectwalk
