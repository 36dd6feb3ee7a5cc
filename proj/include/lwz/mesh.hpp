#pragma once

// Wavefront OBJ meshes and CSV curvature tables over grid sweeps.  Floats
// always print with 17 significant digits, so identical inputs produce
// identical bytes.

#include <string>

#include "lwz/grid.hpp"

namespace lwz {

struct MeshOptions {
    bool skip_singular = true;
    // Emit coordinates in the order (x2, x3, x1) for viewers that expect
    // the vertical axis last; the geometry is unchanged.
    bool euclidean_view = false;
};

/// OBJ text: vertices row-major, each grid quad split into two triangles.
/// With skip_singular, vertices where the induced metric degenerates are
/// dropped together with their faces; a cluster of singular vertices whose
/// images collapse to one ambient point is emitted once, preceded by a
/// "# cone" comment.
std::string write_obj(const Surface& s, const GridSpec& g,
                      const MeshOptions& opt = {});

/// CSV table "x,y,K,H,Q,R,Lambda,class", one row per lattice point in
/// row-major order.  K and H print as "nan" on singular rows.
std::string write_csv(const WeierstrassData& d, const GridSpec& g);

} // namespace lwz
