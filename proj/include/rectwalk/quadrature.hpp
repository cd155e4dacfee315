#pragma once

#include <functional>

namespace rectwalk {

struct IntegrationRequest {
    std::function<double(double)> integrand; // finite on the open interval
    double lower = 0.0;
    double upper = 1.0;
    double rel_tol = 1e-12;                  // accepted range [1e-15, 1e-3]
};

struct IntegrationResult {
    double value = 0.0;
    double err_estimate = 0.0; // last inter-level (or per-panel) difference
    long evaluations = 0;
};

// tanh–sinh (double-exponential) quadrature with level doubling.  Handles
// integrable power-law endpoint singularities of exponent > −1.  Terminates
// when successive levels agree within rel_tol, hard cap 12 levels.
// Throws accuracy_error (carrying the best estimate) on non-convergence and
// integrand_error if the integrand returns NaN/Inf at an interior node.
IntegrationResult integrate_de(const IntegrationRequest& req);

// Same engine, but the integrand receives the node together with its
// distances to both endpoints: f(x, dist_lo, dist_hi) with
// x ≈ lower + dist_lo ≈ upper − dist_hi.  The distances are formed directly
// from the node table, never by subtraction, so they stay accurate down to
// below 1e−300 where the doubles lower/upper could not resolve them.  This is
// what lets endpoint-singular factors like (1−t)^((b−1)/2) be evaluated to
// full precision arbitrarily close to the endpoint.
IntegrationResult integrate_de_nodes(
    const std::function<double(double, double, double)>& integrand,
    double lower, double upper, double rel_tol);

// Adaptive bisection with a fixed-order Gauss–Kronrod 7/15 panel rule.
// Cross-check engine for smooth integrands only (endpoint singularities
// belong to integrate_de).
IntegrationResult integrate_adaptive(const IntegrationRequest& req);

} // namespace rectwalk
