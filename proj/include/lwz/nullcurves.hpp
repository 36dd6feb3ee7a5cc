#pragma once

// Surfaces of the form f(u, v) = phi(u) + psi(v) for a pair of null curves:
// the translation-surface picture of a timelike minimal surface in null
// coordinates u = x + y, v = x - y.

#include <functional>

#include "lwz/domain.hpp"
#include "lwz/linalg.hpp"

namespace lwz {

/// Curve sample with two derivatives; generating curves are supplied as
/// closures with analytic derivatives.
struct CurveJet {
    Vec3 p;
    Vec3 d1;
    Vec3 d2;
};

using NullCurve = std::function<CurveJet(double)>;

struct NullPatch {
    NullCurve phi;
    NullCurve psi;
};

inline Vec3 patch_point(const NullPatch& s, double u, double v) {
    return s.phi(u).p + s.psi(v).p;
}

/// Validates that both generators are null, <g', g'> = 0, at a lattice of
/// samples (NotNull otherwise) and that the mixed pairing <phi', psi'>
/// does not vanish identically on the domain (Degenerate otherwise).
NullPatch from_null_curves(NullCurve phi, NullCurve psi, const Rect& uv,
                           int validation_samples = 17);

/// Fundamental forms in the (u, v) frame.  With I = 2 Lambda du dv and
/// II = Q du^2 + R dv^2 the shape operator is off-diagonal:
/// S = [[0, R/Lambda], [Q/Lambda, 0]], K = -QR/Lambda^2, H = 0.
struct PatchForms {
    double Lambda;
    Vec3 nu;     // lorentz_cross(phi', psi') / Lambda, unit spacelike
    double Q, R; // <phi'', nu>, <psi'', nu>
    double S21, S12;
    double K;
};

/// Throws Degenerate where Lambda vanishes against the generator scale.
PatchForms null_forms(const NullPatch& s, double u, double v);

enum class DeformKind { Associated, Conjugate };

/// Associated deformation {e^theta phi, e^-theta psi} (the isometric
/// family) or the conjugate patch {phi, -psi}.
NullPatch deform(const NullPatch& s, DeformKind kind, double theta = 0.0);

enum class FlatKind {
    TotallyUmbilicPlane, // both Hopf coefficients vanish identically
    LightlikeCylinder,   // exactly one family of straight lightlike rulings
    NotFlat,
    Inconclusive, // K = 0 numerically but neither ruling family closes
};

struct FlatClassification {
    FlatKind kind;
    Vec3 ruling{}; // lightlike direction, max-abs component scaled to 1
};

FlatClassification flat_classify(const NullPatch& s, const Rect& uv,
                                 int samples = 17);

} // namespace lwz
