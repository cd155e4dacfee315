#pragma once

namespace rectwalk {

// Modulus α > 1 of the half-plane-to-rectangle map, stored as the excess
// ε = α − 1.  For large aspect ratios ε ~ 8e^{−πr/2} carries the entire
// information content; a plain double holding α would truncate it to ~10
// digits, so every routine downstream consumes the excess.
struct ModulusAlpha {
    explicit ModulusAlpha(double excess_);
    static ModulusAlpha from_alpha(double alpha);

    double alpha() const { return 1.0 + excess; }

    double excess;
};

// Axis-aligned rectangle: horizontal edge a, vertical edge c.
struct Rectangle {
    double a;
    double c;
};

// Preimage d·i of the rectangle's centre on the imaginary axis; d = √α.
struct StartPreimage {
    double d;
};

struct BoundaryPoint {
    double x;
    double y;
};

enum class AlphaPath { theta, asymptotic, automatic };

// Rectangle dimensions a = (2/α)·K(1/α), c = (1/α)·K(√(α²−1)/α).  The
// complementary modulus is built from the excess as √ε·√(2+ε)/α — never as
// √(1−k²) — so nothing cancels when α → 1.
Rectangle rect_dims(const ModulusAlpha& alpha);

// Aspect ratio r = a/c; strictly decreasing in α.
double aspect_from_alpha(const ModulusAlpha& alpha);

// Inverse of aspect_from_alpha for r ≥ 1.  Two evaluation paths:
//   theta       ε = θ₄(√q)²/θ₂(q)², q = e^{−2π/r}  (exact theta identity for
//               θ₃² − θ₂², so the excess is formed without subtraction);
//   asymptotic  ε = 8e^{−πr/2} + 32e^{−πr}, then Newton-polished against
//               aspect_from_alpha with a centred-difference derivative
//               (step ε·1e−4).  One step suffices for r ≥ 5; the polish
//               iterates to a fixed point (≤ 3 steps) so the path stays
//               accurate down to r ≈ 3 where it is cross-checked against
//               the theta path.
// The automatic rule uses theta for r < 5 and asymptotic for r ≥ 5.
ModulusAlpha alpha_from_aspect(double r, AlphaPath path = AlphaPath::automatic);

// Truncated log series
//   r = (1/π)[4·log(2√2) − 2·log ε + ε − (3/8)ε² + (5/24)ε³]
// valid for 0 < ε < 0.5; cross-check only.
double aspect_series_log(const ModulusAlpha& alpha);

StartPreimage start_preimage(const ModulusAlpha& alpha);

// Boundary trace of f(z) = ∫₀^z dξ/(√(1−ξ²)·√(α²−ξ²)) for u ∈ [−α, α]:
// u ∈ [−1,1] lands on the bottom edge at (f(u), 0); u ∈ ±(1, α] climbs the
// right/left edge at (±a/2, y).  Endpoint singularities are integrable and
// handled by the double-exponential engine.
BoundaryPoint sc_map_boundary(double u, const ModulusAlpha& alpha);

// |f′(u)| = |1−u²|^{−1/2}·|α²−u²|^{−1/2}; u must avoid {±1, ±α}.
double sc_map_deriv_abs(double u, const ModulusAlpha& alpha);

} // namespace rectwalk
