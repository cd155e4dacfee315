#include "rectwalk/hitting.hpp"
#include "rectwalk/quadrature.hpp"
#include "rectwalk/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rectwalk {

namespace {

constexpr double asym_regime_guard = 2.0;

void check_exponent(double b) {
    if (!(b > 0.0) || !std::isfinite(b))
        throw std::domain_error("hitting exponent must satisfy b > 0, got " +
                                std::to_string(b));
}

double closed_form_err(double value) {
    // Closed forms are exact up to a few roundings.
    return 4.0 * 2.220446049250313e-16 * std::abs(value);
}

} // namespace

const char* method_name(RatioMethod m) {
    switch (m) {
        case RatioMethod::quadrature: return "quadrature";
        case RatioMethod::closed_rw:  return "closed_rw";
        case RatioMethod::leading:    return "leading";
        case RatioMethod::two_term:   return "two_term";
    }
    return "unknown";
}

double lambda_const(double b) {
    check_exponent(b);
    const double q = gamma_fn(0.5 * (1.0 + b)) / gamma_fn(0.5 * b);
    return q * q;
}

double hit_density_halfplane(double x, double alpha, double b) {
    if (!(alpha >= 1.0))
        throw std::domain_error("hit_density_halfplane: need alpha >= 1");
    check_exponent(b);
    return std::pow(x * x + alpha, -b);
}

RatioResult ratio_quadrature(const ModulusAlpha& alpha, double b, double rel_tol) {
    check_exponent(b);
    const double eps = alpha.excess;
    const double al = alpha.alpha();
    const double p = 0.5 * (b - 1.0);

    // Numerator after u = 1 + tε:  N = ε^b ∫₀¹ [t(1−t)]^p (2+tε)^p (2+ε(1+t))^p
    //                                          ((1+tε)² + α)^(−b) dt.
    auto fn = [&](double t, double d_lo, double d_hi) {
        const double ue = t * eps;
        const double u1 = 1.0 + ue;
        return std::pow(d_lo * d_hi, p) * std::pow(2.0 + ue, p) *
               std::pow(2.0 + eps * (1.0 + t), p) * std::pow(u1 * u1 + al, -b);
    };
    const IntegrationResult num = integrate_de_nodes(fn, 0.0, 1.0, rel_tol);

    // Denominator folded onto [0,1] (even integrand):  1−u² = d_hi·(1+u) and
    // α−u = ε + d_hi keep both near-1 factors cancellation-free.
    auto fd = [&](double u, double, double d_hi) {
        return std::pow(u * u + al, -b) * std::pow(d_hi * (1.0 + u), p) *
               std::pow((eps + d_hi) * (al + u), p);
    };
    const IntegrationResult den = integrate_de_nodes(fd, 0.0, 1.0, rel_tol);

    RatioResult out;
    out.value = std::pow(eps, b) * num.value / (2.0 * den.value);
    out.method = RatioMethod::quadrature;
    out.err_estimate = std::abs(out.value) *
                       (num.err_estimate / std::abs(num.value) +
                        den.err_estimate / std::abs(den.value));
    out.r = aspect_from_alpha(alpha);
    out.b = b;
    return out;
}

RatioResult ratio_closed_rw(const ModulusAlpha& alpha) {
    const double eps = alpha.excess;
    const double sa = std::sqrt(alpha.alpha());
    // arctan√α − arctan(1/√α) = arctan((√α − 1/√α)/2) = arctan(ε/(2√α)).
    const double numer = std::atan(eps / (2.0 * sa));
    const double denom = 2.0 * std::atan(1.0 / sa);

    RatioResult out;
    out.value = numer / denom;
    out.method = RatioMethod::closed_rw;
    out.err_estimate = closed_form_err(out.value);
    out.r = aspect_from_alpha(alpha);
    out.b = 1.0;
    return out;
}

RatioResult ratio_rw_asymptotic(double r, int order) {
    if (order != 1 && order != 2)
        throw std::domain_error("ratio_rw_asymptotic: order must be 1 or 2");
    if (!(r > 0.0))
        throw std::domain_error("ratio_rw_asymptotic: need r > 0");
    const double u = std::exp(-0.5 * M_PI * r);
    const double lead = (8.0 / M_PI) * u;

    RatioResult out;
    out.value = (order == 1) ? lead : lead + (64.0 / (M_PI * M_PI)) * u * u;
    out.method = (order == 1) ? RatioMethod::leading : RatioMethod::two_term;
    // Estimate the truncation by the scale of the next term.
    out.err_estimate = out.value * std::pow((8.0 / M_PI) * u, order);
    out.r = r;
    out.b = 1.0;
    out.regime_warning = r < asym_regime_guard;
    return out;
}

namespace {

double leading_coefficient(double b) {
    const double g1 = gamma_fn(0.5 + 0.5 * b);
    const double form1 = std::pow(2.0, 2.0 * b) * g1 * g1 /
                         (gamma_fn(1.0 + 0.5 * b) * gamma_fn(0.5 * b));
    const double form2 = std::pow(2.0, 2.0 * b + 1.0) * lambda_const(b) / b;
    if (std::abs(form1 - form2) > 1e-13 * std::abs(form1))
        throw std::logic_error("ratio_asymptotic_leading: coefficient forms disagree");
    return form1;
}

} // namespace

RatioResult ratio_asymptotic_leading(double r, double b) {
    check_exponent(b);
    if (!(r > 0.0))
        throw std::domain_error("ratio_asymptotic_leading: need r > 0");
    RatioResult out;
    out.value = leading_coefficient(b) * std::exp(-0.5 * M_PI * b * r);
    out.method = RatioMethod::leading;
    // The known next correction sets the error scale.
    double corr;
    if (b < 1.0) {
        const double lam = lambda_const(b);
        corr = std::abs(lam * std::pow(2.0, 2.0 * b + 1.0) /
                        (b * std::sin(0.5 * M_PI * b)) * std::exp(-0.5 * b * M_PI * r)) +
               std::abs(4.0 * (b - 1.0 + 2.0 * lam) * std::exp(-0.5 * M_PI * r));
    } else {
        corr = (8.0 / M_PI) * std::exp(-0.5 * M_PI * r);
    }
    out.err_estimate = out.value * corr;
    out.r = r;
    out.b = b;
    out.regime_warning = r < asym_regime_guard;
    return out;
}

RatioResult ratio_asymptotic_two_term(double r, double b) {
    check_exponent(b);
    if (!(b < 1.0))
        throw std::domain_error("ratio_asymptotic_two_term: defined for 0 < b < 1 only; "
                                "for b = 1 use ratio_rw_asymptotic(r, 2)");
    if (!(r > 0.0))
        throw std::domain_error("ratio_asymptotic_two_term: need r > 0");
    const double lam = lambda_const(b);
    const double ub = std::exp(-0.5 * b * M_PI * r);
    const double u = std::exp(-0.5 * M_PI * r);
    const double lead = std::pow(2.0, 2.0 * b + 1.0) * lam / b * ub;
    const double corr1 = lam * std::pow(2.0, 2.0 * b + 1.0) /
                         (b * std::sin(0.5 * M_PI * b)) * ub;
    const double corr2 = 4.0 * (b - 1.0 + 2.0 * lam) * u;

    RatioResult out;
    out.value = lead * (1.0 + corr1 + corr2);
    out.method = RatioMethod::two_term;
    out.err_estimate = out.value * corr1 * corr1; // next order ~ (first correction)²
    out.r = r;
    out.b = b;
    out.regime_warning = r < asym_regime_guard;
    return out;
}

double denom_approx(double b) {
    check_exponent(b);
    return std::sqrt(M_PI) * gamma_fn(0.5 * b) / (2.0 * gamma_fn(0.5 * b + 0.5));
}

double numer_approx(const ModulusAlpha& alpha, double b) {
    check_exponent(b);
    return std::pow(2.0, -b - 1.0) * std::sqrt(M_PI) * gamma_fn(0.5 * (1.0 + b)) /
           gamma_fn(1.0 + 0.5 * b) * std::pow(alpha.excess, b);
}

double end_probability(const RatioResult& ratio) {
    if (!(ratio.value >= 0.0))
        throw std::domain_error("end_probability: ratio must be non-negative");
    return ratio.value / (1.0 + ratio.value);
}

double ratio_from_probability(double p) {
    if (!(p >= 0.0) || !(p < 1.0))
        throw std::domain_error("ratio_from_probability: need p in [0, 1)");
    return p / (1.0 - p);
}

double brownian_exact_pe() {
    const double s2 = std::sqrt(2.0);
    const double f1 = 3.0 - 2.0 * s2;
    const double f2 = 2.0 + std::sqrt(5.0);
    const double f3 = std::sqrt(10.0) - 3.0;
    const double f4 = std::pow(5.0, 0.25) - s2;
    const double arg = f1 * f1 * f2 * f2 * f3 * f3 * (f4 * f4) * (f4 * f4);
    return (2.0 / M_PI) * std::asin(arg);
}

} // namespace rectwalk
