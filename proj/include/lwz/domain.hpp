#pragma once

// Rectangular parameter domains and deterministic sampling helpers shared
// by the surface, symmetry, and meshing code.

#include <random>
#include <vector>

#include "lwz/linalg.hpp"

namespace lwz {

struct Rect {
    double x0 = 0.0, x1 = 1.0;
    double y0 = 0.0, y1 = 1.0;
};

inline double lerp_index(double a, double b, int i, int n) {
    return n <= 1 ? a : a + (b - a) * (static_cast<double>(i) / (n - 1));
}

/// Row-major nx*ny lattice including the boundary.
inline std::vector<SplitComplex> sample_grid(const Rect& r, int nx, int ny) {
    std::vector<SplitComplex> out;
    out.reserve(static_cast<std::size_t>(nx) * ny);
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            out.push_back({lerp_index(r.x0, r.x1, ix, nx),
                           lerp_index(r.y0, r.y1, iy, ny)});
    return out;
}

/// Uniform interior samples from a fixed-seed generator, reproducible
/// across runs and platforms that share the mt19937_64 stream.
inline std::vector<SplitComplex> sample_random(const Rect& r, int n,
                                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(r.x0, r.x1), uy(r.y0, r.y1);
    std::vector<SplitComplex> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double x = ux(rng);
        out.push_back({x, uy(rng)});
    }
    return out;
}

inline double bbox_diagonal(const std::vector<Vec3>& pts) {
    if (pts.empty()) return 0.0;
    Vec3 lo = pts.front(), hi = pts.front();
    for (const Vec3& p : pts)
        for (int k = 0; k < 3; ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    return euclidean_norm(hi - lo);
}

} // namespace lwz
