#pragma once

#include "rectwalk/scmap.hpp"

namespace rectwalk {

// Hitting exponent b > 0 of the boundary density (x² + α)^(−b).
inline constexpr double BROWNIAN_B = 1.0;
inline constexpr double SAW_B = 0.625;

enum class RatioMethod { quadrature, closed_rw, leading, two_term };

const char* method_name(RatioMethod m);

// End-versus-side hitting ratio R together with how it was obtained.
struct RatioResult {
    double value = 0.0;
    RatioMethod method = RatioMethod::quadrature;
    double err_estimate = 0.0;
    double r = 0.0; // aspect ratio of the underlying rectangle
    double b = 0.0;
    bool regime_warning = false; // asymptotic method used below its regime guard r >= 2
};

// Λ(b) = (Γ((1+b)/2)/Γ(b/2))².
double lambda_const(double b);

// Unnormalised boundary hitting density (x² + α)^(−b) on the real axis for a
// walk started at i·√α in the upper half plane.  α ≥ 1 (plain value: the
// α = 1 degenerate case is legitimate here even though ModulusAlpha excludes it).
double hit_density_halfplane(double x, double alpha, double b);

// R(α,b) = N/D with
//   N = ∫₁^α (u²+α)^(−b) (u²−1)^((b−1)/2) (α²−u²)^((b−1)/2) du
//   D = ∫₋₁¹ (u²+α)^(−b) (1−u²)^((b−1)/2) (α²−u²)^((b−1)/2) du.
// The numerator is evaluated after u = 1 + t(α−1): the interval becomes [0,1]
// and every vanishing factor is expressed through the stored excess, so the
// integral survives α − 1 ~ 1e−300.  The denominator is folded onto [0,1].
RatioResult ratio_quadrature(const ModulusAlpha& alpha, double b, double rel_tol = 1e-10);

// Brownian closed form R(α,1) = [arctan√α − arctan(1/√α)] / [2·arctan(1/√α)];
// the numerator is collapsed to arctan(ε/(2√α)) by the arctan subtraction
// identity, so nothing cancels as α → 1.
RatioResult ratio_closed_rw(const ModulusAlpha& alpha);

// Brownian large-r expansion: order 1 gives (8/π)e^(−πr/2); order 2 adds
// (64/π²)e^(−πr).  r below the regime guard 2 sets regime_warning.
RatioResult ratio_rw_asymptotic(double r, int order);

// Leading asymptotic R̃ = [2^(2b)·Γ((1+b)/2)²/(Γ(1+b/2)·Γ(b/2))]·e^(−πbr/2)
// for general b; the coefficient is cross-asserted against 2^(2b+1)Λ/b.
RatioResult ratio_asymptotic_leading(double r, double b);

// Two-term refinement for 0 < b < 1:
//   R̃ = (2^(2b+1)Λ/b)·e^(−bπr/2)·[1 + (Λ·2^(2b+1)/(b·sin(πb/2)))·e^(−bπr/2)
//                                    + 4(b−1+2Λ)·e^(−πr/2)].
// b = 1 callers are directed to ratio_rw_asymptotic (hard error here).
RatioResult ratio_asymptotic_two_term(double r, double b);

// α → 1 limits of the two integrals: D ≈ √π·Γ(b/2)/(2Γ(b/2+1/2)) and
// N ≈ 2^(−b−1)·√π·Γ((1+b)/2)/Γ(1+b/2)·(α−1)^b (excess-powered).
double denom_approx(double b);
double numer_approx(const ModulusAlpha& alpha, double b);

// p = R/(1+R) and its inverse R = p/(1−p).
double end_probability(const RatioResult& ratio);
double ratio_from_probability(double p);

// Closed form for the Brownian end probability at aspect ratio 10:
// p_e = (2/π)·arcsin[(3−2√2)²·(2+√5)²·(√10−3)²·(5^(1/4)−√2)⁴].
double brownian_exact_pe();

} // namespace rectwalk
