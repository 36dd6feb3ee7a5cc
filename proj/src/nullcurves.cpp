#include "lwz/nullcurves.hpp"

#include <cmath>

#include "lwz/errors.hpp"
#include "lwz/tolerances.hpp"

namespace lwz {

namespace {

void check_null(const NullCurve& g, double t, const char* which) {
    const CurveJet c = g(t);
    const double speed_sq = c.d1[0] * c.d1[0] + c.d1[1] * c.d1[1] +
                            c.d1[2] * c.d1[2];
    if (std::abs(minkowski(c.d1, c.d1)) >
        tol::null_curve() * std::max(1.0, speed_sq))
        fail(ErrorCode::NotNull,
             std::string("generating curve ") + which +
                 " is not null at a validation sample");
}

Vec3 euclidean_cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

/// Scale so the largest component is 1 in magnitude and the first nonzero
/// component is positive.
Vec3 canonical_direction(Vec3 v) {
    const double m = max_abs(v);
    if (m == 0.0) return v;
    v = (1.0 / m) * v;
    for (int k = 0; k < 3; ++k) {
        if (v[k] != 0.0) {
            if (v[k] < 0.0) v = -v;
            break;
        }
    }
    return v;
}

} // namespace

NullPatch from_null_curves(NullCurve phi, NullCurve psi, const Rect& uv,
                           int validation_samples) {
    const int n = std::max(2, validation_samples);
    double lam_max = 0.0, scale = 1.0;
    for (int i = 0; i < n; ++i) {
        const double u = lerp_index(uv.x0, uv.x1, i, n);
        const double v = lerp_index(uv.y0, uv.y1, i, n);
        check_null(phi, u, "phi");
        check_null(psi, v, "psi");
        const Vec3 du = phi(u).d1, dv = psi(v).d1;
        lam_max = std::max(lam_max, std::abs(minkowski(du, dv)));
        scale = std::max(scale, euclidean_norm(du) * euclidean_norm(dv));
    }
    if (lam_max <= tol::singular() * scale)
        fail(ErrorCode::Degenerate,
             "generating curves pair to a degenerate metric on the whole "
             "domain");
    return {std::move(phi), std::move(psi)};
}

PatchForms null_forms(const NullPatch& s, double u, double v) {
    const CurveJet cu = s.phi(u), cv = s.psi(v);
    PatchForms out{};
    out.Lambda = minkowski(cu.d1, cv.d1);
    const double scale =
        std::max(1.0, euclidean_norm(cu.d1) * euclidean_norm(cv.d1));
    if (std::abs(out.Lambda) <= tol::singular() * scale)
        fail(ErrorCode::Degenerate,
             "metric coefficient Lambda vanishes at the requested point");
    // Signed normalization keeps nu consistent with the Gauss-map formula
    // on the Weierstrass side: <cross, cross> = Lambda^2 makes cross/Lambda
    // automatically unit.
    out.nu = (1.0 / out.Lambda) * lorentz_cross(cu.d1, cv.d1);
    out.Q = minkowski(cu.d2, out.nu);
    out.R = minkowski(cv.d2, out.nu);
    out.S21 = out.Q / out.Lambda;
    out.S12 = out.R / out.Lambda;
    out.K = -out.Q * out.R / (out.Lambda * out.Lambda);
    return out;
}

NullPatch deform(const NullPatch& s, DeformKind kind, double theta) {
    if (kind == DeformKind::Conjugate) {
        NullCurve psi = s.psi;
        return {s.phi, [psi](double v) {
                    CurveJet c = psi(v);
                    return CurveJet{-c.p, -c.d1, -c.d2};
                }};
    }
    const double a = std::exp(theta), b = std::exp(-theta);
    NullCurve phi = s.phi, psi = s.psi;
    return {[phi, a](double u) {
                CurveJet c = phi(u);
                return CurveJet{a * c.p, a * c.d1, a * c.d2};
            },
            [psi, b](double v) {
                CurveJet c = psi(v);
                return CurveJet{b * c.p, b * c.d1, b * c.d2};
            }};
}

FlatClassification flat_classify(const NullPatch& s, const Rect& uv,
                                 int samples) {
    const int n = std::max(3, samples);
    double max_k = 0.0, max_qn = 0.0, max_rn = 0.0;
    for (int iu = 0; iu < n; ++iu)
        for (int iv = 0; iv < n; ++iv) {
            const double u = lerp_index(uv.x0, uv.x1, iu, n);
            const double v = lerp_index(uv.y0, uv.y1, iv, n);
            const PatchForms f = null_forms(s, u, v);
            max_k = std::max(max_k, std::abs(f.K));
            max_qn = std::max(max_qn, std::abs(f.Q / f.Lambda));
            max_rn = std::max(max_rn, std::abs(f.R / f.Lambda));
        }

    if (max_k > tol::curvature_sign()) return {FlatKind::NotFlat};

    const double taup = tol::hopf_vanishing();
    if (max_qn <= taup && max_rn <= taup)
        return {FlatKind::TotallyUmbilicPlane};

    // Exactly one vanishing Hopf coefficient: that parameter family should
    // consist of straight lightlike lines in a common direction.
    const bool v_rules = max_rn <= taup; // psi'' normal component vanishes
    const bool u_rules = max_qn <= taup;
    if (v_rules == u_rules) return {FlatKind::Inconclusive};

    const NullCurve& ruled = v_rules ? s.psi : s.phi;
    const double t0 = v_rules ? uv.y0 : uv.x0;
    const double t1 = v_rules ? uv.y1 : uv.x1;
    const Vec3 dir0 = ruled(0.5 * (t0 + t1)).d1;
    const double dscale = std::max(1.0, euclidean_norm(dir0));
    for (int i = 0; i < n; ++i) {
        const CurveJet c = ruled(lerp_index(t0, t1, i, n));
        // Straightness: second derivative parallel to the first, and the
        // direction must not turn across the family.
        if (euclidean_norm(euclidean_cross(c.d2, c.d1)) >
                tol::hopf_vanishing() * dscale * dscale ||
            euclidean_norm(euclidean_cross(c.d1, dir0)) >
                tol::hopf_vanishing() * dscale * dscale)
            return {FlatKind::Inconclusive};
    }
    return {FlatKind::LightlikeCylinder, canonical_direction(dir0)};
}

} // namespace lwz
