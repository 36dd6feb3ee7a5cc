#pragma once

// Lattice sweeps over a parameter rectangle.  Positions march the lift one
// grid edge at a time (one short quadrature per edge instead of one long
// path per point): first along row 0, then up each column.  Columns are
// mutually independent, so the parallel kernel distributes them across
// threads and reproduces the serial output bit for bit.

#include <vector>

#include "lwz/domain.hpp"
#include "lwz/weierstrass.hpp"

namespace lwz {

struct GridSpec {
    Rect rect{};
    int nx = 2;
    int ny = 2;
};

inline SplitComplex grid_point(const GridSpec& g, int ix, int iy) {
    return {lerp_index(g.rect.x0, g.rect.x1, ix, g.nx),
            lerp_index(g.rect.y0, g.rect.y1, iy, g.ny)};
}

/// Row-major positions at the nx*ny lattice points.  Throws Validation
/// unless nx, ny >= 2.
std::vector<Vec3> sweep_positions_serial(const Surface& s,
                                         const GridSpec& g);
std::vector<Vec3> sweep_positions(const Surface& s, const GridSpec& g);

/// Row-major curvature jets; the position field stays zero.  An error at
/// any lattice point aborts the sweep.
std::vector<SurfaceJet> sweep_curvature_serial(const WeierstrassData& d,
                                               const GridSpec& g);
std::vector<SurfaceJet> sweep_curvature(const WeierstrassData& d,
                                        const GridSpec& g);

} // namespace lwz
