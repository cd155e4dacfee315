#include "doctest.h"

#include "rectwalk/errors.hpp"
#include "rectwalk/quadrature.hpp"
#include "rectwalk/specfun.hpp"
#include "test_util.hpp"

#include <cmath>
#include <stdexcept>

using namespace rectwalk;
using testutil::rel_err;

TEST_CASE("integrate_de on smooth integrands") {
    IntegrationRequest req;
    req.integrand = [](double x) { return std::exp(x); };
    const IntegrationResult r = integrate_de(req);
    CHECK(rel_err(r.value, std::exp(1.0) - 1.0) <= 1e-13);
    CHECK(r.evaluations > 0);
    CHECK(r.err_estimate <= 2e-12 * r.value);

    req.integrand = [](double x) { return x * x * x; };
    CHECK(rel_err(integrate_de(req).value, 0.25) <= 1e-13);

    req.integrand = [](double x) { return std::sin(10.0 * x); };
    CHECK(rel_err(integrate_de(req).value, (1.0 - std::cos(10.0)) / 10.0) <= 1e-12);
}

TEST_CASE("integrate_de endpoint-singular Beta kernels (plain interface)") {
    // B(s+1, s+1) = Gamma(s+1)^2 / Gamma(2s+2).
    for (double s : {-0.1875, -0.1}) {
        IntegrationRequest req;
        req.integrand = [s](double x) { return std::pow(x * (1.0 - x), s); };
        const double g = gamma_fn(s + 1.0);
        CAPTURE(s);
        CHECK(rel_err(integrate_de(req).value, g * g / gamma_fn(2.0 * s + 2.0)) <= 1e-12);
    }
}

TEST_CASE("integrate_de_nodes resolves singular factors from endpoint distances") {
    for (double s : {-0.4, -0.1875, -0.1, 0.25}) {
        const IntegrationResult r = integrate_de_nodes(
            [s](double, double d_lo, double d_hi) { return std::pow(d_lo * d_hi, s); },
            0.0, 1.0, 1e-12);
        const double g = gamma_fn(s + 1.0);
        CAPTURE(s);
        CHECK(rel_err(r.value, g * g / gamma_fn(2.0 * s + 2.0)) <= 1e-11);
    }
    // Off the unit interval the distances must still be exact.
    const IntegrationResult r = integrate_de_nodes(
        [](double, double d_lo, double d_hi) {
            return 1.0 / std::sqrt(d_lo * d_hi);
        },
        2.0, 6.0, 1e-12);
    CHECK(rel_err(r.value, M_PI) <= 1e-12); // ∫ dx/√((x−2)(6−x)) = π
}

TEST_CASE("quadrature request validation") {
    IntegrationRequest req;
    req.integrand = [](double x) { return x; };
    req.rel_tol = 1e-16;
    CHECK_THROWS_AS(integrate_de(req), std::domain_error);
    req.rel_tol = 1e-2;
    CHECK_THROWS_AS(integrate_de(req), std::domain_error);
    req.rel_tol = 1e-10;
    req.lower = 2.0;
    req.upper = 1.0;
    CHECK_THROWS_AS(integrate_de(req), std::domain_error);
    req.lower = 1.0;
    CHECK_THROWS_AS(integrate_de(req), std::domain_error);

    IntegrationRequest empty;
    empty.integrand = nullptr;
    CHECK_THROWS_AS(integrate_de(empty), std::domain_error);
    CHECK_THROWS_AS(integrate_adaptive(empty), std::domain_error);
}

TEST_CASE("integrate_de rejects non-finite integrand values") {
    IntegrationRequest req;
    req.integrand = [](double x) { return x < 0.3 ? std::nan("") : 1.0; };
    CHECK_THROWS_AS(integrate_de(req), integrand_error);
}

TEST_CASE("integrate_de reports non-convergence with its best estimate") {
    IntegrationRequest req;
    req.integrand = [](double x) { return x < 0.6366 ? 0.0 : 1.0; };
    req.rel_tol = 1e-15;
    bool thrown = false;
    try {
        integrate_de(req);
    } catch (const accuracy_error& e) {
        thrown = true;
        CHECK(std::abs(e.best_estimate() - (1.0 - 0.6366)) <= 1e-3);
        CHECK(e.err_estimate() > 0.0);
    }
    CHECK(thrown);
}

TEST_CASE("integrate_adaptive agrees with integrate_de on smooth integrands") {
    IntegrationRequest req;
    req.integrand = [](double x) { return std::exp(-x * x); };
    req.lower = 0.0;
    req.upper = 2.0;
    req.rel_tol = 1e-12;
    const IntegrationResult gk = integrate_adaptive(req);
    const IntegrationResult de = integrate_de(req);
    CHECK(rel_err(gk.value, de.value) <= 1e-12);
    CHECK(gk.evaluations >= 15);

    req.integrand = [](double x) { return std::sin(x); };
    req.lower = 0.0;
    req.upper = M_PI;
    CHECK(rel_err(integrate_adaptive(req).value, 2.0) <= 1e-12);
}
