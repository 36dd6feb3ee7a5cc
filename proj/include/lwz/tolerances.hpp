#pragma once

namespace lwz {

/// Global tolerance multiplier, read once from the environment variable
/// LWZ_TOL (default 1.0).  Every tolerance below is pre-multiplied by it,
/// so loosening a noisy platform is a one-variable change.
double tol_scale();

namespace tol {

// Relative threshold below which a split-complex modulus counts as zero
// (lightlike).  Scaled by the squared magnitude of the operand.
inline double zero_divisor() { return 1e-12 * tol_scale(); }

// |1 - |h|^2| <= singular() marks a point of the singular locus.
inline double singular() { return 1e-8 * tol_scale(); }

// Classification thresholds, applied after normalizing the Hopf
// coefficients by |Lambda| so the class is invariant under positive
// real rescaling of eta.
inline double curvature_sign() { return 1e-8 * tol_scale(); }
inline double hopf_vanishing() { return 1e-8 * tol_scale(); }

// Constancy of the eta ratio in the isometry-class comparison.
inline double ratio_constancy() { return 1e-7 * tol_scale(); }

// <g', g'> residual allowed when validating a generating null curve,
// relative to the Euclidean size of g'.
inline double null_curve() { return 1e-9 * tol_scale(); }

// Image-diameter threshold for shrinking singularities, relative to the
// bounding-box scale of the sampled surface.
inline double image_collapse() { return 1e-6 * tol_scale(); }

// Residual threshold for an accepted symmetry, relative to the bounding-box
// diagonal of the sampled positions.
inline double symmetry() { return 1e-6 * tol_scale(); }

// Absolute quadrature tolerance per axis-aligned path leg.
inline double quadrature() { return 1e-10 * tol_scale(); }

// Entry-wise tolerance for tA I(1,2) A = c I(1,2).
inline double conformal() { return 1e-10 * tol_scale(); }

// Propagated linear parts must be real and Lorentz-orthogonal within this.
inline double realness() { return 1e-8 * tol_scale(); }

// Central-difference step for the paraholomorphy residual; a Richardson
// pass at step/10 cancels the leading error term.
inline double wirtinger_step() { return 1e-4; }

} // namespace tol
} // namespace lwz
