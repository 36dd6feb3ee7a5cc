#include <doctest.h>

#include <cmath>

#include "lwz/catalog.hpp"
#include "oracles.hpp"

using namespace lwz;
using oracle::pc_gap;
using oracle::vec_gap;

namespace {

WeierstrassData enneper() { return catalog_entry("enneper").data; }

Vec3 enneper_closed(double x, double y) {
    return {-x - x * x * x / 3.0 - x * y * y,
            y - x * x * y - y * y * y / 3.0, x * x + y * y};
}

} // namespace

TEST_CASE("omega at hand-substituted points") {
    const auto d = enneper();
    const Vec3c w0 = omega_at(d, {0.0, 0.0});
    CHECK(pc_gap(w0[0], {-1.0, 0.0}) == 0.0);
    CHECK(pc_gap(w0[1], {0.0, 1.0}) == 0.0);
    CHECK(pc_gap(w0[2], {0.0, 0.0}) == 0.0);

    const auto ec = catalog_entry("elliptic-catenoid").data;
    const Vec3c e0 = omega_at(ec, {0.0, 0.0});
    CHECK(pc_gap(e0[0], {-0.5, 0.0}) < 1e-16);
    CHECK(pc_gap(e0[1], {0.0, 0.5}) < 1e-16);
    CHECK(pc_gap(e0[2], {0.0, 0.0}) < 1e-16);
}

TEST_CASE("omega is a null vector identically") {
    const auto d = enneper();
    for (const SplitComplex z :
         {SplitComplex{0.3, 0.1}, SplitComplex{-0.8, 0.75},
          SplitComplex{1.4, -0.2}}) {
        const Vec3c w = omega_at(d, z);
        CHECK(component_norm(minkowski_c(w, w)) < 1e-14);
    }
}

TEST_CASE("evaluate against printed closed forms") {
    const auto d = enneper();
    CHECK(vec_gap(evaluate(d, {1.0, 0.0}), {-4.0 / 3.0, 0.0, 1.0}) < 1e-12);
    CHECK(vec_gap(evaluate(d, {0.0, 1.0}), {0.0, 2.0 / 3.0, 1.0}) < 1e-12);
    CHECK(vec_gap(evaluate(d, {0.6, -0.4}), enneper_closed(0.6, -0.4)) <
          1e-12);

    const auto ec = catalog_entry("elliptic-catenoid").data;
    CHECK(vec_gap(evaluate(ec, {0.0, 0.0}), {0.0, 0.0, -0.25}) < 1e-12);
}

TEST_CASE("metric factor: values, zeros, and the chart formula") {
    const auto d = enneper();
    CHECK(metric_factor(d, {0.0, 0.0}) == doctest::Approx(-1.0));
    CHECK(std::abs(metric_factor(d, {1.0, 0.0})) < 1e-12);
    for (const SplitComplex z :
         {SplitComplex{0.25, 0.1}, SplitComplex{-0.5, 0.6}}) {
        CHECK(metric_factor(d, z) ==
              doctest::Approx(metric_factor_chart(d, z)).epsilon(1e-12));
    }
}

TEST_CASE("unit normal: values, normalization, stereographic inverse") {
    const auto d = enneper();
    // Orientation follows the normalized Lorentzian cross product of the
    // null-coordinate frame, which points to -x3 over h = 0.
    CHECK(vec_gap(unit_normal(d, {0.0, 0.0}), {0.0, 0.0, -1.0}) < 1e-15);

    const SplitComplex z{0.2, 0.1};
    const Vec3 nu = unit_normal(d, z);
    CHECK(minkowski(nu, nu) == doctest::Approx(1.0));
    // Stereographic projection from the normal recovers the chart value.
    CHECK(nu[0] / (1.0 - nu[2]) == doctest::Approx(z.re));
    CHECK(nu[1] / (1.0 - nu[2]) == doctest::Approx(z.im));

    const Vec3c w = omega_at(d, z);
    CHECK(std::abs(minkowski(nu, real_part(w))) < 1e-12);
    CHECK(std::abs(minkowski(nu, imag_part(w))) < 1e-12);

    const auto at_singular =
        oracle::error_code_of([&] { unit_normal(d, {1.0, 0.0}); });
    REQUIRE(at_singular.has_value());
    CHECK(*at_singular == ErrorCode::SingularPoint);
}

TEST_CASE("curvature jet against a finite-difference shape operator") {
    const auto d = enneper();
    for (const SplitComplex z :
         {SplitComplex{0.0, 0.5}, SplitComplex{0.3, -0.2},
          SplitComplex{-0.6, 0.25}}) {
        const SurfaceJet j = curvature_jet(d, z);
        const auto fd = oracle::fd_shape(d, z);
        CHECK(j.K == doctest::Approx(fd.K).epsilon(1e-5));
        CHECK(std::abs(fd.H) < 1e-6);
        CHECK(std::abs(j.H) < 1e-8);
        CHECK(j.K < 0.0);
        CHECK(j.cls == PointClass::RealDiagonalizable);
    }
}

TEST_CASE("constant data is umbilic") {
    const auto d = make_data(expr::parse("0.3"), expr::parse("1"));
    const SurfaceJet j = curvature_jet(d, {0.4, 0.1});
    CHECK(j.Q == 0.0);
    CHECK(j.R == 0.0);
    CHECK(j.cls == PointClass::Umbilic);
    CHECK(std::abs(j.K) < 1e-15);
}

TEST_CASE("point classification is stable under positive eta scaling") {
    const auto d = enneper();
    const auto scaled = scale_eta(d, {2.5, 0.0});
    for (const SplitComplex z :
         {SplitComplex{0.0, 0.5}, SplitComplex{0.4, 0.3},
          SplitComplex{1.0, 0.0}}) {
        CHECK(curvature_jet(d, z).cls == curvature_jet(scaled, z).cls);
    }
}

TEST_CASE("singular curve classification") {
    std::vector<SplitComplex> curve;
    for (int i = 0; i <= 12; ++i)
        curve.push_back({0.5 + 0.05 * i, 0.0});

    CHECK(singularity_classify(catalog_entry("parabolic-catenoid").data,
                               curve) == SingularityKind::Shrinking);
    CHECK(singularity_classify(catalog_entry("parabolic-helicoid").data,
                               curve) == SingularityKind::Folding);

    const auto regular = oracle::error_code_of([&] {
        std::vector<SplitComplex> c{{0.2, 0.0}, {0.3, 0.0}, {0.4, 0.0}};
        singularity_classify(enneper(), c);
    });
    REQUIRE(regular.has_value());
    CHECK(*regular == ErrorCode::NotSingular);
}

TEST_CASE("isometry class comparison") {
    const auto d = enneper();
    const auto samples = sample_random({-0.8, 0.8, -0.8, 0.8}, 12, 3);

    const auto iso = isometry_class_compare(
        d, scale_eta(d, pexp({0.0, 0.7}).f), samples);
    CHECK(iso.relation == IsometryRelation::Isometric);
    CHECK(iso.theta == doctest::Approx(0.7));
    CHECK(iso.sign == 1);

    const auto anti = isometry_class_compare(d, scale_eta(d, kJ), samples);
    CHECK(anti.relation == IsometryRelation::AntiIsometric);
    CHECK(anti.theta == doctest::Approx(0.0));

    auto unrelated = d;
    unrelated.eta_hat = expr::mul(expr::variable(), d.eta_hat);
    unrelated.h_eta = expr::mul(expr::variable(), d.h_eta);
    unrelated.h2_eta = expr::mul(expr::variable(), d.h2_eta);
    CHECK(isometry_class_compare(d, unrelated, samples).relation ==
          IsometryRelation::Unrelated);

    const auto mismatch = oracle::error_code_of([&] {
        isometry_class_compare(d, catalog_entry("elliptic-catenoid").data,
                               samples);
    });
    REQUIRE(mismatch.has_value());
    CHECK(*mismatch == ErrorCode::GaussMapMismatch);

    const auto flat = oracle::error_code_of([&] {
        const auto p = catalog_entry("flat-plane").data;
        isometry_class_compare(p, p, sample_random({0.0, 1.0, 0.0, 1.0},
                                                   12, 3));
    });
    REQUIRE(flat.has_value());
    CHECK(*flat == ErrorCode::FlatRegion);
}

TEST_CASE("integration is path independent") {
    const auto d = catalog_entry("elliptic-catenoid").data;
    const SplitComplex z{0.8, -0.6};
    const Vec3 a = evaluate(d, z, PathRoute::RealFirst);
    const Vec3 b = evaluate(d, z, PathRoute::ImagFirst);
    CHECK(vec_gap(a, b) < 1e-10);
    const Vec3 c = evaluate_via(
        d, {SplitComplex{0.8, 0.3}, SplitComplex{0.1, 0.3}, z});
    CHECK(vec_gap(a, c) < 1e-10);
}

TEST_CASE("wirtinger residuals of the stored products are small") {
    for (const auto& name : catalog_names()) {
        const auto d = catalog_entry(name).data;
        const SplitComplex z{0.45, 0.15};
        const auto eta = [&](SplitComplex w) {
            return expr::eval_jet(d.eta_hat, w).f;
        };
        const auto h2eta = [&](SplitComplex w) {
            return expr::eval_jet(d.h2_eta, w).f;
        };
        CHECK(wirtinger_residual(eta, z) < 1e-6);
        CHECK(wirtinger_residual(h2eta, z) < 1e-6);
    }
}
