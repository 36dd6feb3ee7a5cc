#pragma once

// Surfaces from paracomplex Weierstrass data (h, eta) and their pointwise
// differential-geometric invariants.
//
// The generating form is
//
//   omega = t( -(1 + h^2), j(1 - h^2), 2h ) * eta_hat
//
// and the surface is f(z) = base_value + Re integral omega dz from the base
// point.  The data carries the pole-free products h*eta_hat and h^2*eta_hat
// alongside h and eta_hat, so omega (and everything built from it) stays
// evaluable across poles of h where only the chart, not the surface,
// degenerates.

#include <functional>
#include <vector>

#include "lwz/expr.hpp"
#include "lwz/linalg.hpp"

namespace lwz {

struct WeierstrassData {
    expr::NodePtr h;        // Gauss map in the unit-disk-type chart
    expr::NodePtr eta_hat;  // eta = eta_hat dz
    expr::NodePtr h_eta;    // h * eta_hat, pole-free where the surface is
    expr::NodePtr h2_eta;   // h^2 * eta_hat
    SplitComplex base_point{};
    Vec3 base_value{};
};

/// Builds data from (h, eta_hat); the products are formed symbolically.
WeierstrassData make_data(expr::NodePtr h, expr::NodePtr eta_hat,
                          SplitComplex base_point = {}, Vec3 base_value = {});

/// Builds data from explicit pole-free products.  When h is null it is
/// reconstructed as the quotient (h eta)/(eta), usable away from lightlike
/// eta values.
WeierstrassData make_data_products(expr::NodePtr h, expr::NodePtr eta_hat,
                                   expr::NodePtr h_eta, expr::NodePtr h2_eta,
                                   SplitComplex base_point = {},
                                   Vec3 base_value = {});

/// Data with eta multiplied by the constant s (and h unchanged): s = e^{j
/// theta} walks the associated family, s = j gives the conjugate surface.
WeierstrassData scale_eta(const WeierstrassData& d, SplitComplex s);

// ---------------------------------------------------------------------------
// Pointwise evaluation
// ---------------------------------------------------------------------------

/// omega(z), assembled from the pole-free products only.
Vec3c omega_at(const WeierstrassData& d, SplitComplex z);

/// omega and its z-derivative.
struct OmegaJet {
    Vec3c omega;
    Vec3c omega_dz;
};
OmegaJet omega_jet(const WeierstrassData& d, SplitComplex z);

enum class PathRoute {
    RealFirst, // base -> (z.re, base.im) -> z
    ImagFirst, // base -> (base.re, z.im) -> z
};

/// Paracomplex lift Phi(z) = integral of omega from the base point along an
/// axis-aligned route; Phi(base_point) = 0.
Vec3c integral_lift(const WeierstrassData& d, SplitComplex z,
                    PathRoute route = PathRoute::RealFirst);

/// Surface position f(z) = base_value + Re Phi(z).
Vec3 evaluate(const WeierstrassData& d, SplitComplex z,
              PathRoute route = PathRoute::RealFirst);

/// Position integrated along the polyline base_point -> w_1 -> ... -> w_n;
/// the last waypoint is the evaluation point.
Vec3 evaluate_via(const WeierstrassData& d,
                  const std::vector<SplitComplex>& waypoints);

/// Conformal factor lambda with I = lambda (dx^2 - dy^2), computed as
/// <omega, conj omega>/2 from the products alone.
double metric_factor(const WeierstrassData& d, SplitComplex z);

/// The same factor through the chart formula -(1 - |h|^2)^2 |eta_hat|^2;
/// requires h evaluable at z.
double metric_factor_chart(const WeierstrassData& d, SplitComplex z);

/// Unit spacelike normal t(2 Re h, 2 Im h, -(1 + |h|^2)) / (1 - |h|^2).
/// Throws SingularPoint on the locus |h|^2 = 1.
Vec3 unit_normal(const WeierstrassData& d, SplitComplex z);

// ---------------------------------------------------------------------------
// Curvature and point classification
// ---------------------------------------------------------------------------

enum class PointClass {
    Singular,           // |h|^2 = 1: induced metric degenerates
    RealDiagonalizable, // K < 0: shape operator has real principal directions
    ComplexPrincipal,   // K > 0: principal directions complex-conjugate
    QuasiUmbilic,       // K = 0, exactly one Hopf coefficient vanishes
    Umbilic,            // K = 0, both Hopf coefficients vanish
};

/// Label used in curvature tables.
const char* point_class_label(PointClass c);

struct SurfaceJet {
    SplitComplex z;
    Vec3 position{};   // filled by callers that integrated a position
    Vec3c omega;
    Vec3c omega_dz;
    double lambda;     // I = lambda (dx^2 - dy^2)
    double Lambda;     // null-coordinate coefficient: I = 2 Lambda du dv
    Vec3 nu;           // NaN at singular points
    double Q, R;       // Hopf coefficients <f_uu, nu>, <f_vv, nu>
    double K, H;       // NaN at singular points
    PointClass cls;
};

/// All second-order invariants at z.  H is measured, not assumed: the
/// x-part of the wave operator is analytic (Re omega'), the y-part is a
/// Richardson central difference of Im omega, so a nonzero residual would
/// expose non-paraholomorphic data.  Throws ZeroDivisor at poles of the
/// h-chart.
SurfaceJet curvature_jet(const WeierstrassData& d, SplitComplex z);

// ---------------------------------------------------------------------------
// Transformed-surface view
// ---------------------------------------------------------------------------

/// A surface Re(A Phi) + offset.  With the identity frame and include_base
/// this is the plain data surface; transformed surfaces use include_base =
/// false and vanish at the base point.
struct Surface {
    WeierstrassData data;
    Mat3c frame = complexify(kIdentity);
    bool include_base = true;
};

Vec3c surface_omega(const Surface& s, SplitComplex z);
Vec3 surface_point(const Surface& s, SplitComplex z,
                   PathRoute route = PathRoute::RealFirst);

// ---------------------------------------------------------------------------
// Singular-locus and isometry-class analysis
// ---------------------------------------------------------------------------

enum class SingularityKind {
    Shrinking, // the singular curve maps to one ambient point (cone)
    Folding,   // the image is a regular curve the surface folds across
    Other,
};

/// Classifies a sampled curve that must lie in the singular locus.
/// Throws NotSingular when any sample has |1 - |h|^2| above tolerance.
SingularityKind singularity_classify(const WeierstrassData& d,
                                     const std::vector<SplitComplex>& curve);

enum class IsometryRelation { Isometric, AntiIsometric, Unrelated };

struct IsometryComparison {
    IsometryRelation relation;
    double theta = 0.0; // family angle, meaningful unless Unrelated
    int sign = +1;      // overall +-1 factor on eta
};

/// Compares two data sets sharing a Gauss map.  eta2/eta1 constant with
/// modulus +1 means an associated-family member (Isometric, recovering
/// theta and the sign), modulus -1 an anti-isometric companion; any other
/// constant or a nonconstant ratio is Unrelated.  Throws GaussMapMismatch
/// when the Gauss maps differ and FlatRegion when K vanishes identically
/// on the samples, where the comparison's hypotheses fail.
IsometryComparison isometry_class_compare(
    const WeierstrassData& a, const WeierstrassData& b,
    const std::vector<SplitComplex>& samples);

} // namespace lwz
