#include "rectwalk/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rectwalk {

namespace detail {

double agm(double a, double b, int* iterations) {
    int it = 0;
    // Quadratic convergence: 40 iterations is unreachable for valid input.
    // The gap threshold must sit above one ulp or rounding jitter in the
    // last place can keep the loop alive at the fixed point.
    constexpr double gap_tol = 4.0 * 2.2204460492503131e-16;
    while (it < 40) {
        const double am = 0.5 * (a + b);
        const double gm = std::sqrt(a * b);
        ++it;
        a = am;
        b = gm;
        if (std::abs(am - gm) <= gap_tol * am) break;
    }
    if (iterations) *iterations = it;
    return 0.5 * (a + b);
}

} // namespace detail

double elliptic_K(double k) {
    if (!(k >= 0.0) || k >= 1.0)
        throw std::domain_error("elliptic_K: modulus must satisfy 0 <= k < 1, got " +
                                std::to_string(k));
    // Complement as a product: no cancellation for k near 0, half an ulp near 1.
    const double kc = std::sqrt((1.0 - k) * (1.0 + k));
    return M_PI / (2.0 * detail::agm(1.0, kc));
}

double elliptic_K_prime(double k) {
    if (!(k > 0.0) || k >= 1.0)
        throw std::domain_error("elliptic_K_prime: modulus must satisfy 0 < k < 1, got " +
                                std::to_string(k));
    return M_PI / (2.0 * detail::agm(1.0, k));
}

double nome_from_modulus(double k) {
    if (!(k > 0.0) || k >= 1.0)
        throw std::domain_error("nome_from_modulus: modulus must satisfy 0 < k < 1, got " +
                                std::to_string(k));
    return std::exp(-M_PI * elliptic_K_prime(k) / elliptic_K(k));
}

namespace {

constexpr double theta_q_cap = 0.95;
constexpr double theta_term_cut = 1e-17;

void check_nome(double q, const char* who) {
    if (!(q >= 0.0) || q > theta_q_cap)
        throw std::domain_error(std::string(who) + ": nome must satisfy 0 <= q <= " +
                                std::to_string(theta_q_cap) + ", got " + std::to_string(q));
}

} // namespace

double theta2(double q) {
    check_nome(q, "theta2");
    if (q == 0.0) return 0.0;
    // 2 q^{1/4} Σ_{n≥0} q^{n(n+1)};  term ratio q^{2(n+1)}.
    const double q2 = q * q;
    double ratio = q2;      // q^{2·1}
    double term = 1.0;
    double sum = 1.0;
    for (;;) {
        term *= ratio;      // q^{n(n+1)}
        sum += term;
        if (term < theta_term_cut * sum) break;
        ratio *= q2;
    }
    return 2.0 * std::pow(q, 0.25) * sum;
}

double theta3(double q) {
    check_nome(q, "theta3");
    if (q == 0.0) return 1.0;
    // 1 + 2 Σ_{n≥1} q^{n²};  term ratio q^{2n+1}.
    const double q2 = q * q;
    double ratio = q;       // q^{2·0+1}
    double term = 2.0;
    double sum = 1.0;
    for (;;) {
        term *= ratio;
        sum += term;
        if (term < theta_term_cut * sum) break;
        ratio *= q2;
    }
    return sum;
}

double theta4(double q) {
    check_nome(q, "theta4");
    if (q == 0.0) return 1.0;
    const double q2 = q * q;
    double ratio = q;
    double term = 2.0;
    double sum = 1.0;
    double sign = -1.0;
    for (;;) {
        term *= ratio;
        sum += sign * term;
        if (term < theta_term_cut * std::abs(sum)) break;
        ratio *= q2;
        sign = -sign;
    }
    return sum;
}

namespace {

// Lanczos g = 7, n = 9 coefficient set; relative error a few 1e−15 across
// (0, 50] (worst observed 2.3e−14 near x = 50).
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

} // namespace

double gamma_fn(double x) {
    if (!(x > 0.0))
        throw std::domain_error("gamma_fn: argument must be positive, got " +
                                std::to_string(x));
    if (x < 0.5) return gamma_fn(x + 1.0) / x;
    const double z = x - 1.0;
    double a = lanczos_c[0];
    for (int i = 1; i < 9; ++i) a += lanczos_c[i] / (z + i);
    const double t = z + 7.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

} // namespace rectwalk
