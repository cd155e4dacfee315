#include "rectwalk/lattice.hpp"
#include "rectwalk/errors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rectwalk {

namespace {

constexpr long sweep_cap = 200000;
constexpr int residual_stride = 8;

} // namespace

GridSpec::GridSpec(int interior_width_, int interior_height_)
    : interior_width(interior_width_), interior_height(interior_height_) {
    if (interior_width < 1 || interior_height < 1)
        throw std::domain_error("GridSpec: interior dimensions must be >= 1");
    if (interior_width % 2 == 0 || interior_height % 2 == 0)
        throw std::domain_error("GridSpec: interior dimensions must be odd "
                                "so a centre cell exists");
}

GridSolution discrete_harmonic_ratio(const GridSpec& spec, double solve_tol,
                                     bool absorb_ends) {
    if (!(solve_tol > 0.0) || !std::isfinite(solve_tol))
        throw std::domain_error("discrete_harmonic_ratio: need solve_tol > 0");

    const int w = spec.interior_width;
    const int h = spec.interior_height;
    const int stride = w + 2;
    const double end_value = absorb_ends ? 1.0 : 0.0;
    const double side_value = absorb_ends ? 0.0 : 1.0;

    // (h+2)×(w+2) buffer with the absorbing values baked into the rim.
    // Corners take the long-side value; no interior stencil reaches them.
    std::vector<double> p(static_cast<std::size_t>(h + 2) * stride, 0.0);
    for (int j = 0; j < stride; ++j) {
        p[j] = side_value;
        p[static_cast<std::size_t>(h + 1) * stride + j] = side_value;
    }
    for (int i = 1; i <= h; ++i) {
        p[static_cast<std::size_t>(i) * stride] = end_value;
        p[static_cast<std::size_t>(i) * stride + w + 1] = end_value;
    }

    const int dominant = std::max(w, h);
    const double omega = 2.0 / (1.0 + std::sin(M_PI / (dominant + 1)));

    auto stencil_avg = [&](std::size_t idx) {
        return 0.25 * (p[idx - 1] + p[idx + 1] + p[idx - stride] + p[idx + stride]);
    };

    long sweeps = 0;
    double residual = std::numeric_limits<double>::infinity();
    while (sweeps < sweep_cap) {
        for (int colour = 0; colour < 2; ++colour) {
            for (int i = 1; i <= h; ++i) {
                const int j0 = 1 + ((i + colour) & 1);
                std::size_t idx = static_cast<std::size_t>(i) * stride + j0;
                for (int j = j0; j <= w; j += 2, idx += 2)
                    p[idx] += omega * (stencil_avg(idx) - p[idx]);
            }
        }
        ++sweeps;
        if (sweeps % residual_stride == 0 || sweeps == sweep_cap) {
            residual = 0.0;
            for (int i = 1; i <= h; ++i) {
                std::size_t idx = static_cast<std::size_t>(i) * stride + 1;
                for (int j = 1; j <= w; ++j, ++idx)
                    residual = std::max(residual, std::abs(stencil_avg(idx) - p[idx]));
            }
            if (residual <= solve_tol) break;
        }
    }

    const std::size_t centre =
        static_cast<std::size_t>((h + 1) / 2) * stride + (w + 1) / 2;
    GridSolution out;
    out.p_end = p[centre];
    out.ratio = out.p_end / (1.0 - out.p_end);
    out.residual = residual;
    out.sweeps = sweeps;
    if (residual > solve_tol)
        throw accuracy_error("discrete_harmonic_ratio: SOR did not reach "
                             "tolerance within " + std::to_string(sweep_cap) +
                             " sweeps", out.ratio, residual);
    return out;
}

double refine_extrapolate(double aspect, const std::vector<GridSpec>& sizes,
                          double solve_tol, double* order_out) {
    if (sizes.size() < 3)
        throw std::domain_error("refine_extrapolate: need at least 3 grid sizes");
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        if (std::abs(sizes[k].aspect_proxy() - aspect) > 1e-9 * aspect)
            throw std::domain_error("refine_extrapolate: grid " + std::to_string(k) +
                                    " does not match aspect " + std::to_string(aspect));
        if (k > 0 && sizes[k].interior_height + 1 != 2 * (sizes[k - 1].interior_height + 1))
            throw std::domain_error("refine_extrapolate: resolutions must double "
                                    "at each refinement level");
    }

    std::vector<double> ratios;
    ratios.reserve(sizes.size());
    for (const GridSpec& s : sizes)
        ratios.push_back(discrete_harmonic_ratio(s, solve_tol).ratio);

    const std::size_t n = ratios.size();
    const double r3 = ratios[n - 1];
    const double d1 = ratios[n - 2] - ratios[n - 3];
    const double d2 = r3 - ratios[n - 2];

    // Sequence already flat at solver-tolerance scale (e.g. the square,
    // which is exact at every resolution): nothing left to extrapolate.
    if (std::abs(d1) <= 1000.0 * solve_tol && std::abs(d2) <= 1000.0 * solve_tol) {
        if (order_out) *order_out = std::numeric_limits<double>::infinity();
        return r3;
    }
    if (d1 * d2 <= 0.0 || std::abs(d2) >= std::abs(d1))
        throw extrapolation_error("refine_extrapolate: refinement differences "
                                  "are not monotonically shrinking", r3,
                                  std::abs(d2));

    const double order = std::log2(d1 / d2);
    if (order_out) *order_out = order;
    return r3 + d2 / (std::exp2(order) - 1.0);
}

} // namespace rectwalk
