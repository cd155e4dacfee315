#pragma once

#include <stdexcept>
#include <string>

namespace rectwalk {

// A numerical routine failed to reach its requested accuracy but still has a
// usable estimate; callers may recover the best value and its error bound.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double best_estimate, double err_estimate)
        : std::runtime_error(what), best_(best_estimate), err_(err_estimate) {}

    double best_estimate() const noexcept { return best_; }
    double err_estimate() const noexcept { return err_; }

private:
    double best_;
    double err_;
};

// The integrand produced NaN/Inf at an interior quadrature node.
class integrand_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Richardson extrapolation was handed data it cannot fit (e.g. a
// non-monotone resolution sequence).  The finest-level value is still
// reported as the best estimate.
class extrapolation_error : public accuracy_error {
public:
    using accuracy_error::accuracy_error;
};

} // namespace rectwalk
