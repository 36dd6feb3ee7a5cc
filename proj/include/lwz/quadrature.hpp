#pragma once

// Adaptive Gauss-Kronrod quadrature for split-complex-vector integrands
// along straight segments in the parameter plane, and path assembly for
// the axis-aligned integration routes used by the surface evaluator.

#include <functional>
#include <vector>

#include "lwz/linalg.hpp"

namespace lwz {

/// Integrand sampled along a segment: t in [0,1] is mapped to a point of
/// the segment by the caller-provided closure.
using SegmentIntegrand = std::function<Vec3c(double)>;

/// Adaptive 15-point Kronrod / 7-point Gauss rule on [a, b] with bisection
/// until the embedded error estimate drops below abs_tol per subinterval
/// share.  Throws Quadrature if 30 bisection levels do not suffice.
Vec3c integrate_adaptive(const SegmentIntegrand& g, double a, double b,
                         double abs_tol);

/// Straight segments from z0 to z1 moving parallel to the axes: first along
/// the real axis, then the imaginary one (or the reverse order).  Zero-length
/// legs are dropped.
std::vector<std::pair<SplitComplex, SplitComplex>>
axis_aligned_legs(SplitComplex z0, SplitComplex z1, bool real_axis_first);

/// Consecutive straight segments through the given waypoints.
std::vector<std::pair<SplitComplex, SplitComplex>>
polyline_legs(const std::vector<SplitComplex>& points);

/// Integral of omega(z) dz over the legs; omega may throw, and any Error
/// raised while sampling is rewrapped as Path with the original message.
Vec3c integrate_form(const std::function<Vec3c(SplitComplex)>& omega,
                     const std::vector<std::pair<SplitComplex, SplitComplex>>&
                         legs);

} // namespace lwz
