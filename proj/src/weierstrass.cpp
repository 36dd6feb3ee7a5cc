#include "lwz/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lwz/quadrature.hpp"
#include "lwz/tolerances.hpp"

namespace lwz {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct DataJets {
    Jet2 eta;
    Jet2 p1; // h eta
    Jet2 p2; // h^2 eta
};

DataJets product_jets(const WeierstrassData& d, SplitComplex z) {
    return {expr::eval_jet(d.eta_hat, z), expr::eval_jet(d.h_eta, z),
            expr::eval_jet(d.h2_eta, z)};
}

Vec3c omega_value(const DataJets& j) {
    return {-(j.eta.f + j.p2.f), kJ * (j.eta.f - j.p2.f), 2.0 * j.p1.f};
}

Vec3c omega_derivative(const DataJets& j) {
    return {-(j.eta.df + j.p2.df), kJ * (j.eta.df - j.p2.df), 2.0 * j.p1.df};
}

double lambda_from_omega(const Vec3c& w) {
    // <w, conj w> is real by symmetry of the bilinear form.
    return 0.5 * minkowski_c(w, pc_conj(w)).re;
}

Vec3 normal_from_h(SplitComplex h) {
    const double hsq = modulus_sq(h);
    const double den = 1.0 - hsq;
    return {2.0 * h.re / den, 2.0 * h.im / den, -(1.0 + hsq) / den};
}

} // namespace

WeierstrassData make_data(expr::NodePtr h, expr::NodePtr eta_hat,
                          SplitComplex base_point, Vec3 base_value) {
    WeierstrassData d;
    d.h_eta = expr::mul(h, eta_hat);
    d.h2_eta = expr::mul(expr::pow(h, 2), eta_hat);
    d.h = std::move(h);
    d.eta_hat = std::move(eta_hat);
    d.base_point = base_point;
    d.base_value = base_value;
    return d;
}

WeierstrassData make_data_products(expr::NodePtr h, expr::NodePtr eta_hat,
                                   expr::NodePtr h_eta, expr::NodePtr h2_eta,
                                   SplitComplex base_point, Vec3 base_value) {
    WeierstrassData d;
    d.h = h ? std::move(h) : expr::div(h_eta, eta_hat);
    d.eta_hat = std::move(eta_hat);
    d.h_eta = std::move(h_eta);
    d.h2_eta = std::move(h2_eta);
    d.base_point = base_point;
    d.base_value = base_value;
    return d;
}

WeierstrassData scale_eta(const WeierstrassData& d, SplitComplex s) {
    WeierstrassData out = d;
    const expr::NodePtr c = expr::literal(s);
    out.eta_hat = expr::mul(c, d.eta_hat);
    out.h_eta = expr::mul(c, d.h_eta);
    out.h2_eta = expr::mul(c, d.h2_eta);
    return out;
}

Vec3c omega_at(const WeierstrassData& d, SplitComplex z) {
    return omega_value(product_jets(d, z));
}

OmegaJet omega_jet(const WeierstrassData& d, SplitComplex z) {
    const DataJets j = product_jets(d, z);
    return {omega_value(j), omega_derivative(j)};
}

Vec3c integral_lift(const WeierstrassData& d, SplitComplex z,
                    PathRoute route) {
    auto omega = [&](SplitComplex w) { return omega_at(d, w); };
    return integrate_form(omega,
                          axis_aligned_legs(d.base_point, z,
                                            route == PathRoute::RealFirst));
}

Vec3 evaluate(const WeierstrassData& d, SplitComplex z, PathRoute route) {
    return d.base_value + real_part(integral_lift(d, z, route));
}

Vec3 evaluate_via(const WeierstrassData& d,
                  const std::vector<SplitComplex>& waypoints) {
    std::vector<SplitComplex> points;
    points.reserve(waypoints.size() + 1);
    points.push_back(d.base_point);
    points.insert(points.end(), waypoints.begin(), waypoints.end());
    auto omega = [&](SplitComplex w) { return omega_at(d, w); };
    return d.base_value + real_part(integrate_form(omega,
                                                   polyline_legs(points)));
}

double metric_factor(const WeierstrassData& d, SplitComplex z) {
    return lambda_from_omega(omega_at(d, z));
}

double metric_factor_chart(const WeierstrassData& d, SplitComplex z) {
    const SplitComplex h = expr::eval_jet(d.h, z).f;
    const SplitComplex eta = expr::eval_jet(d.eta_hat, z).f;
    const double dh = 1.0 - modulus_sq(h);
    return -dh * dh * modulus_sq(eta);
}

Vec3 unit_normal(const WeierstrassData& d, SplitComplex z) {
    const SplitComplex h = expr::eval_jet(d.h, z).f;
    if (std::abs(1.0 - modulus_sq(h)) <= tol::singular())
        fail(ErrorCode::SingularPoint,
             "unit normal undefined on the singular locus |h|^2 = 1");
    return normal_from_h(h);
}

const char* point_class_label(PointClass c) {
    switch (c) {
    case PointClass::Singular:           return "singular";
    case PointClass::RealDiagonalizable: return "real-diag";
    case PointClass::ComplexPrincipal:   return "complex";
    case PointClass::QuasiUmbilic:       return "quasi-umbilic";
    case PointClass::Umbilic:            return "umbilic";
    }
    return "?";
}

SurfaceJet curvature_jet(const WeierstrassData& d, SplitComplex z) {
    const DataJets pj = product_jets(d, z);
    const Jet2 hj = expr::eval_jet(d.h, z);

    SurfaceJet out;
    out.z = z;
    out.omega = omega_value(pj);
    out.omega_dz = omega_derivative(pj);
    out.lambda = lambda_from_omega(out.omega);
    out.Lambda = 0.5 * out.lambda;

    // Hopf coefficients from the quadratic differential eta dh, whose
    // null-coordinate components are the normal curvatures <f_uu, nu> and
    // <f_vv, nu>.
    const SplitComplex phi = pj.eta.f * hj.df;
    out.Q = -(phi.re + phi.im);
    out.R = -(phi.re - phi.im);

    const double hsq = modulus_sq(hj.f);
    if (std::abs(1.0 - hsq) <= tol::singular()) {
        out.nu = {kNaN, kNaN, kNaN};
        out.K = kNaN;
        out.H = kNaN;
        out.cls = PointClass::Singular;
        return out;
    }

    out.nu = normal_from_h(hj.f);
    out.K = -out.Q * out.R / (out.Lambda * out.Lambda);

    // Measured mean curvature: the wave operator applied to f, paired with
    // nu.  f_xx = Re omega' exactly; f_yy = d/dy Im omega estimated by a
    // Richardson-extrapolated central difference, so the residual vanishes
    // only if omega actually solves the paraholomorphy equations.
    const double step = tol::wirtinger_step();
    auto dy_imw = [&](double s) {
        const Vec3 hi = imag_part(omega_at(d, {z.re, z.im + s}));
        const Vec3 lo = imag_part(omega_at(d, {z.re, z.im - s}));
        return (1.0 / (2.0 * s)) * (hi - lo);
    };
    const Vec3 coarse = dy_imw(step);
    const Vec3 fine = dy_imw(step / 10.0);
    const Vec3 fyy = (1.0 / 99.0) * (100.0 * fine - coarse);
    const Vec3 fxx = real_part(out.omega_dz);
    out.H = minkowski(fxx - fyy, out.nu) / (4.0 * out.Lambda);

    const double tau = tol::curvature_sign();
    const double taup = tol::hopf_vanishing();
    const double qn = out.Q / std::abs(out.Lambda);
    const double rn = out.R / std::abs(out.Lambda);
    const double kn = -qn * rn;
    if (kn < -tau) out.cls = PointClass::RealDiagonalizable;
    else if (kn > tau) out.cls = PointClass::ComplexPrincipal;
    else if (std::abs(qn) <= taup && std::abs(rn) <= taup)
        out.cls = PointClass::Umbilic;
    else out.cls = PointClass::QuasiUmbilic;
    return out;
}

Vec3c surface_omega(const Surface& s, SplitComplex z) {
    return s.frame * omega_at(s.data, z);
}

Vec3 surface_point(const Surface& s, SplitComplex z, PathRoute route) {
    const Vec3c lift = integral_lift(s.data, z, route);
    Vec3 p = real_part(s.frame * lift);
    if (s.include_base) p = p + s.data.base_value;
    return p;
}

SingularityKind singularity_classify(const WeierstrassData& d,
                                     const std::vector<SplitComplex>& curve) {
    if (curve.size() < 2)
        fail(ErrorCode::Validation,
             "singularity classification needs at least two curve samples");
    for (const SplitComplex z : curve) {
        double hsq;
        try {
            hsq = modulus_sq(expr::eval_jet(d.h, z).f);
        } catch (const Error&) {
            fail(ErrorCode::NotSingular,
                 "curve sample falls on a chart pole, not the singular "
                 "locus");
        }
        if (std::abs(1.0 - hsq) > tol::singular())
            fail(ErrorCode::NotSingular,
                 "curve sample leaves the singular locus |h|^2 = 1");
    }

    std::vector<Vec3> image;
    image.reserve(curve.size());
    for (const SplitComplex z : curve) image.push_back(evaluate(d, z));

    double scale = 1.0;
    for (const Vec3& p : image) scale = std::max(scale, euclidean_norm(p));
    double diam = 0.0;
    for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t k = i + 1; k < image.size(); ++k)
            diam = std::max(diam, euclidean_norm(image[i] - image[k]));
    const double collapse = tol::image_collapse() * scale;
    if (diam <= collapse) return SingularityKind::Shrinking;

    for (std::size_t i = 0; i + 1 < image.size(); ++i)
        if (euclidean_norm(image[i + 1] - image[i]) <= collapse)
            return SingularityKind::Other; // partially collapsed image
    return SingularityKind::Folding;
}

IsometryComparison isometry_class_compare(
    const WeierstrassData& a, const WeierstrassData& b,
    const std::vector<SplitComplex>& samples) {
    std::vector<SplitComplex> ratios;
    ratios.reserve(samples.size());
    bool any_curved = false;
    double h_gap = 0.0;

    for (const SplitComplex z : samples) {
        Jet2 ha, hb, ea, eb;
        try {
            ha = expr::eval_jet(a.h, z);
            hb = expr::eval_jet(b.h, z);
            ea = expr::eval_jet(a.eta_hat, z);
            eb = expr::eval_jet(b.eta_hat, z);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ZeroDivisor) continue; // chart pole
            throw;
        }
        h_gap = std::max(h_gap, component_norm(ha.f - hb.f));

        // Flatness probe: K = -|eta h'|^2 / Lambda^2 on the first data set.
        const double lam = metric_factor(a, z);
        if (std::abs(lam) > tol::singular()) {
            const SplitComplex phi = ea.f * ha.df;
            const double k = -4.0 * modulus_sq(phi) / (lam * lam);
            if (std::abs(k) > tol::curvature_sign()) any_curved = true;
        }

        if (!is_zero_divisor(ea.f)) ratios.push_back(pc_div(eb.f, ea.f));
    }

    if (ratios.size() < 3)
        fail(ErrorCode::Degenerate,
             "too few usable sample points for the comparison");
    if (h_gap > tol::ratio_constancy() * 10.0)
        fail(ErrorCode::GaussMapMismatch,
             "data sets have different Gauss maps");
    if (!any_curved)
        fail(ErrorCode::FlatRegion,
             "curvature vanishes on the sampled region; the isometry class "
             "is not determined by the eta ratio");

    SplitComplex mean{};
    for (const SplitComplex r : ratios) mean = mean + r;
    mean = (1.0 / static_cast<double>(ratios.size())) * mean;
    const double mscale = std::max(1.0, component_norm(mean));
    for (const SplitComplex r : ratios)
        if (component_norm(r - mean) > tol::ratio_constancy() * mscale)
            return {IsometryRelation::Unrelated};

    const double m = modulus_sq(mean);
    IsometryComparison out;
    if (std::abs(m - 1.0) <= tol::ratio_constancy() * mscale * mscale) {
        out.relation = IsometryRelation::Isometric;
        out.sign = mean.re > 0.0 ? +1 : -1;
    } else if (std::abs(m + 1.0) <= tol::ratio_constancy() * mscale * mscale) {
        out.relation = IsometryRelation::AntiIsometric;
        out.sign = mean.im > 0.0 ? +1 : -1;
    } else {
        return {IsometryRelation::Unrelated};
    }
    out.theta = std::log(std::abs(mean.re + mean.im));
    return out;
}

} // namespace lwz
