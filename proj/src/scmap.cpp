#include "rectwalk/scmap.hpp"
#include "rectwalk/quadrature.hpp"
#include "rectwalk/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rectwalk {

ModulusAlpha::ModulusAlpha(double excess_) : excess(excess_) {
    if (!(excess > 0.0) || !std::isfinite(excess))
        throw std::domain_error("ModulusAlpha: excess = alpha - 1 must be positive and finite, got " +
                                std::to_string(excess_));
}

ModulusAlpha ModulusAlpha::from_alpha(double alpha) {
    return ModulusAlpha(alpha - 1.0);
}

Rectangle rect_dims(const ModulusAlpha& alpha) {
    const double eps = alpha.excess;
    const double al = alpha.alpha();
    // K(1/α) = π/(2·AGM(1, k′)) with k′ = √(α²−1)/α built from the excess;
    // K(k′)  = π/(2·AGM(1, 1/α)) since the complement of k′ is exactly 1/α.
    const double kp = std::sqrt(eps) * std::sqrt(2.0 + eps) / al;
    const double a = M_PI / (al * detail::agm(1.0, kp));
    const double c = M_PI / (2.0 * al * detail::agm(1.0, 1.0 / al));
    return {a, c};
}

double aspect_from_alpha(const ModulusAlpha& alpha) {
    const Rectangle rect = rect_dims(alpha);
    return rect.a / rect.c;
}

namespace {

constexpr double alpha_path_crossover = 5.0;

double excess_theta_path(double r) {
    const double sq = std::exp(-M_PI / r); // √q
    const double q = sq * sq;
    const double t4 = theta4(sq);
    const double t2 = theta2(q);
    const double quot = t4 / t2;
    return quot * quot;
}

double excess_asymptotic_path(double r) {
    const double u = std::exp(-0.5 * M_PI * r);
    double eps = 8.0 * u + 32.0 * u * u;
    if (!(eps > 0.0))
        throw std::domain_error("alpha_from_aspect: excess underflows for aspect " +
                                std::to_string(r));
    if (eps < 1e-250) return eps; // series already exact; polish would be subnormal noise
    for (int i = 0; i < 3; ++i) {
        const double h = eps * 1e-4;
        const double g = aspect_from_alpha(ModulusAlpha(eps)) - r;
        const double dg = (aspect_from_alpha(ModulusAlpha(eps + h)) -
                           aspect_from_alpha(ModulusAlpha(eps - h))) / (2.0 * h);
        const double step = g / dg;
        eps -= step;
        if (std::abs(step) <= 1e-15 * eps) break;
    }
    return eps;
}

} // namespace

ModulusAlpha alpha_from_aspect(double r, AlphaPath path) {
    if (!(r >= 1.0))
        throw std::domain_error("alpha_from_aspect: aspect ratio must satisfy r >= 1 "
                                "(invert the ratio for tall rectangles), got " +
                                std::to_string(r));
    switch (path) {
        case AlphaPath::theta:      return ModulusAlpha(excess_theta_path(r));
        case AlphaPath::asymptotic: return ModulusAlpha(excess_asymptotic_path(r));
        case AlphaPath::automatic:  break;
    }
    return ModulusAlpha(r < alpha_path_crossover ? excess_theta_path(r)
                                                 : excess_asymptotic_path(r));
}

double aspect_series_log(const ModulusAlpha& alpha) {
    const double eps = alpha.excess;
    if (!(eps > 0.0) || !(eps < 0.5))
        throw std::domain_error("aspect_series_log: series regime is 0 < alpha-1 < 0.5, got " +
                                std::to_string(eps));
    return (4.0 * std::log(2.0 * std::sqrt(2.0)) - 2.0 * std::log(eps) + eps -
            0.375 * eps * eps + (5.0 / 24.0) * eps * eps * eps) / M_PI;
}

StartPreimage start_preimage(const ModulusAlpha& alpha) {
    return {std::sqrt(alpha.alpha())};
}

BoundaryPoint sc_map_boundary(double u, const ModulusAlpha& alpha) {
    const double eps = alpha.excess;
    const double al = alpha.alpha();
    if (!(std::abs(u) <= al))
        throw std::domain_error("sc_map_boundary: need |u| <= alpha");
    const double sign = (u < 0.0) ? -1.0 : 1.0;
    const double uu = std::abs(u);
    constexpr double tol = 1e-12;

    if (uu <= 1.0) {
        if (uu == 0.0) return {0.0, 0.0};
        // Bottom edge: distances give 1−ξ = (1−u) + d_hi without cancellation.
        const double one_minus_u = 1.0 - uu;
        auto f = [&](double xi, double, double d_hi) {
            const double om = one_minus_u + d_hi;          // 1 − ξ
            const double am = eps + om;                    // α − ξ
            return 1.0 / std::sqrt(om * (1.0 + xi) * am * (al + xi));
        };
        const double x = integrate_de_nodes(f, 0.0, uu, tol).value;
        return {sign * x, 0.0};
    }

    // Side edge: ∫₁^u dx̂/√((x̂²−1)(α²−x̂²)); x̂−1 = d_lo, α−x̂ = (α−u) + d_hi,
    // where α−u = ε − (u−1) is routed through the excess so u → α stays exact.
    const double al_minus_u = eps - (uu - 1.0);
    auto f = [&](double x, double d_lo, double d_hi) {
        const double am = al_minus_u + d_hi; // α − x̂
        return 1.0 / std::sqrt(d_lo * (x + 1.0) * am * (al + x));
    };
    const double y = integrate_de_nodes(f, 1.0, uu, tol).value;
    const double half_a = 0.5 * rect_dims(alpha).a;
    return {sign * half_a, y};
}

double sc_map_deriv_abs(double u, const ModulusAlpha& alpha) {
    const double al = alpha.alpha();
    if (std::abs(u) == 1.0 || std::abs(u) == al)
        throw std::domain_error("sc_map_deriv_abs: |f'| is singular at u = +-1 and u = +-alpha");
    const double p1 = std::abs((1.0 - u) * (1.0 + u));
    const double p2 = std::abs((al - u) * (al + u));
    return 1.0 / std::sqrt(p1 * p2);
}

} // namespace rectwalk
