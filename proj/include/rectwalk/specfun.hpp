#pragma once

namespace rectwalk {

// Complete elliptic integral of the first kind, K(k) = ∫₀^{π/2} dθ/√(1−k²sin²θ),
// for modulus 0 ≤ k < 1.  Computed by the arithmetic-geometric mean; relative
// error ≤ 1e−14.
double elliptic_K(double k);

// K′(k) = K(√(1−k²)) for 0 < k < 1.  The complement is formed as
// √((1−k)(1+k)), which is safe here; callers holding α should build the
// complementary modulus from the excess α−1 instead (see scmap).
double elliptic_K_prime(double k);

// Nome q = exp(−π·K′(k)/K(k)) for 0 < k < 1; strictly increasing in k.
double nome_from_modulus(double k);

// Jacobi theta constants (z = 0).  Series summed forward, terms dropped once
// below 1e−17 of the running sum.  Supported for 0 ≤ q ≤ 0.95; larger nomes
// are rejected (callers needing r → ∞ behaviour use the asymptotic path in
// scmap instead of pushing q toward 1).
double theta2(double q);
double theta3(double q);
double theta4(double q);

// Γ(x) for x > 0, relative error ≤ 1e−13 on (0, 50] (the full range used
// anywhere in this library).  Lanczos approximation; x < 0.5 is lifted with
// Γ(x) = Γ(x+1)/x rather than reflection.
double gamma_fn(double x);

namespace detail {
// AGM of a, b > 0.  If iterations is non-null it receives the number of
// iterations taken (quadratic convergence: ≤ 12 for any k ≤ 1 − 1e−12).
double agm(double a, double b, int* iterations = nullptr);
} // namespace detail

} // namespace rectwalk
