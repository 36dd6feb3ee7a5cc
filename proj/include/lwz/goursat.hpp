#pragma once

// The paracomplex conformal group CO(1,2) acting on integrated Weierstrass
// lifts, f_A = Re(A Phi), together with the induced transformations of the
// data itself where they exist in closed form (duality, Lopez-Ros,
// associated and anti-isometric scalings).

#include "lwz/weierstrass.hpp"

namespace lwz {

/// Verifies tA I(1,2) A = c I(1,2) and returns the conformal factor c.
/// Throws NotConformal when no such c exists and LightlikeFactor when c is
/// a zero divisor (the transformed metric would collapse).
SplitComplex conformal_check(const Mat3c& a);

/// Conjugation J = j I3: sends a surface to its conjugate.
Mat3c conjugation_matrix();

/// Duality D = diag(j, 1, 1): swaps curvature sign and singularity types.
Mat3c duality_matrix();

/// J D = diag(1, j, j).
Mat3c conj_duality_matrix();

/// e^{j theta} I3: the associated (isometric) family.
Mat3c associated_matrix(double theta);

/// j e^{j theta} I3: the anti-isometric family.
Mat3c anti_isometric_matrix(double theta);

/// Lorentz boost block realizing (h, eta) -> (lambda h, eta / lambda):
/// [[a, jb, 0], [jb, a, 0], [0, 0, 1]], a = (lambda + 1/lambda)/2,
/// b = (lambda - 1/lambda)/2.  Throws DomainError unless lambda > 0.
Mat3c lopez_ros_matrix(double lambda);

/// Transformed surface position Re(A Phi(z)); vanishes at the base point.
Vec3 transform_point(const WeierstrassData& d, const Mat3c& a,
                     SplitComplex z, PathRoute route = PathRoute::RealFirst);

/// Data of the dual surface: h_D = ((1+j) h - (1-j)/h)/2 with the products
/// built pole-free from the products of d, so the dual stays evaluable
/// across poles of either chart.  Satisfies eta_D dh_D = j eta dh.
WeierstrassData dual_data(const WeierstrassData& d);

/// Data (lambda h, eta/lambda); preserves both Hopf coefficients exactly.
/// Throws DomainError unless lambda > 0.
WeierstrassData lopez_ros_data(const WeierstrassData& d, double lambda);

} // namespace lwz
