#pragma once

#include <cstddef>
#include <vector>

namespace rectwalk {

// Interior cell counts of a rectangular grid; both odd so a centre cell
// exists.  The long axis is horizontal: interior_width >= interior_height is
// conventional but not enforced.  The implied lattice spacing is
// 1/(interior_height+1), and the aspect proxy (interior_width+1)/
// (interior_height+1) plays the role of the continuum aspect ratio r.
struct GridSpec {
    GridSpec(int interior_width_, int interior_height_);

    double aspect_proxy() const {
        return static_cast<double>(interior_width + 1) / (interior_height + 1);
    }

    int interior_width;
    int interior_height;
};

struct GridSolution {
    double p_end;    // absorption probability on the unit-valued sides
    double ratio;    // p_end / (1 - p_end)
    double residual; // max |(1/4)Σ_nb p(nb) - p| over interior at exit
    long sweeps;     // red-black sweeps performed
};

// Discrete harmonic measure of the short sides seen from the centre cell:
// solves p(v) = (1/4)Σ_neighbours p(n) with p = 1 on the two short sides,
// p = 0 on the two long sides (corner sites follow the long-side convention;
// they never enter a 5-point stencil).  Red-black SOR with the textbook
// relaxation factor 2/(1+sin(π/(D+1))), D the dominant dimension; residual
// checked every 8 sweeps against solve_tol.
//
// absorb_ends = false swaps the roles of the two boundary pairs (unit value
// on the long sides); p_end then reports absorption on the long sides, which
// lets callers verify p(ends) + p(sides) = 1.
GridSolution discrete_harmonic_ratio(const GridSpec& spec, double solve_tol,
                                     bool absorb_ends = true);

// Richardson extrapolation of the lattice ratio toward the continuum.
// All specs must share the aspect proxy `aspect` and refine by exact
// doubling of (interior_height+1); at least three levels.  The order p is
// estimated from the finest three levels (expected ≈ 2 for the 5-point
// stencil) and written to *order_out when non-null; the return value is
// r_finest + d_last/(2^p − 1).  A refinement sequence whose differences do
// not shrink monotonically raises an extrapolation error.
double refine_extrapolate(double aspect, const std::vector<GridSpec>& sizes,
                          double solve_tol, double* order_out = nullptr);

} // namespace rectwalk
