#pragma once

#include <cmath>

namespace testutil {

// Relative deviation against a nonzero reference; used instead of
// doctest::Approx because Approx's default scale term turns tiny-magnitude
// comparisons into absolute ones.
inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

} // namespace testutil
