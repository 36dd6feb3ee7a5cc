#include <doctest.h>

#include <cmath>

#include "lwz/catalog.hpp"
#include "lwz/goursat.hpp"
#include "lwz/nullcurves.hpp"
#include "oracles.hpp"

using namespace lwz;
using oracle::pc_gap;
using oracle::vec_gap;

namespace {

double mat_gap_c(const Mat3c& a, const Mat3c& b) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            worst = std::max(worst, component_norm(a[i][k] - b[i][k]));
    return worst;
}

} // namespace

TEST_CASE("conformal factors of the named matrices") {
    CHECK(pc_gap(conformal_check(complexify(kIdentity)), {1.0, 0.0}) <
          1e-15);
    CHECK(pc_gap(conformal_check(conjugation_matrix()), {1.0, 0.0}) < 1e-15);
    CHECK(pc_gap(conformal_check(duality_matrix()), {1.0, 0.0}) < 1e-15);
    CHECK(pc_gap(conformal_check(lopez_ros_matrix(2.0)), {1.0, 0.0}) <
          1e-15);
    CHECK(pc_gap(conformal_check(associated_matrix(0.7)),
                 pexp({0.0, 1.4}).f) < 1e-15);
    CHECK(pc_gap(conformal_check(anti_isometric_matrix(0.7)),
                 pexp({0.0, 1.4}).f) < 1e-15);

    CHECK(mat_gap_c(lopez_ros_matrix(1.0), complexify(kIdentity)) < 1e-15);
    CHECK(mat_gap_c(associated_matrix(0.0), complexify(kIdentity)) < 1e-15);
    CHECK(mat_gap_c(duality_matrix() * conjugation_matrix(),
                    conj_duality_matrix()) < 1e-15);
    CHECK(mat_gap_c(conjugation_matrix() * duality_matrix(),
                    conj_duality_matrix()) < 1e-15);
}

TEST_CASE("conformal check rejections") {
    Mat3c lightlike = complexify(kIdentity);
    for (int i = 0; i < 3; ++i)
        lightlike[i][i] = {1.0, 1.0};
    const auto lf =
        oracle::error_code_of([&] { conformal_check(lightlike); });
    REQUIRE(lf.has_value());
    CHECK(*lf == ErrorCode::LightlikeFactor);

    Mat3c skew = complexify(kIdentity);
    skew[0][1] = {1.0, 0.0};
    const auto nc = oracle::error_code_of([&] { conformal_check(skew); });
    REQUIRE(nc.has_value());
    CHECK(*nc == ErrorCode::NotConformal);

    const auto bad_lambda =
        oracle::error_code_of([] { lopez_ros_matrix(-2.0); });
    REQUIRE(bad_lambda.has_value());
    CHECK(*bad_lambda == ErrorCode::DomainError);
}

TEST_CASE("group closure: factors multiply") {
    const Mat3c mats[] = {conjugation_matrix(), duality_matrix(),
                          associated_matrix(0.6), anti_isometric_matrix(-0.3),
                          lopez_ros_matrix(2.0)};
    for (const auto& a : mats)
        for (const auto& b : mats) {
            const SplitComplex want =
                conformal_check(a) * conformal_check(b);
            CHECK(pc_gap(conformal_check(a * b), want) < 1e-12);
        }
}

TEST_CASE("transformed positions against hand values") {
    const auto d = catalog_entry("enneper").data;

    // Dual surface closed form at (1, 0).
    CHECK(vec_gap(transform_point(d, duality_matrix(), {1.0, 0.0}),
                  {0.0, 0.0, 1.0}) < 1e-10);

    // Identity transform reproduces evaluate (base value is zero here).
    for (const SplitComplex z :
         {SplitComplex{0.7, 0.2}, SplitComplex{-0.3, 0.9}}) {
        CHECK(vec_gap(transform_point(d, complexify(kIdentity), z),
                      evaluate(d, z)) < 1e-12);
    }
}

TEST_CASE("associated transform matches the null-curve deformation") {
    const auto entry = catalog_entry("enneper");
    const auto patch = *entry.patch;
    const double theta = 0.5;
    const auto moved = deform(patch, DeformKind::Associated, theta);
    const Mat3c a = associated_matrix(theta);
    for (double u : {-0.8, 0.0, 0.9})
        for (double v : {-0.7, 0.2, 0.8}) {
            const SplitComplex z{(u + v) / 2.0, (u - v) / 2.0};
            const Vec3 via_patch =
                patch_point(moved, u, v) - patch_point(moved, 0.0, 0.0);
            CHECK(vec_gap(transform_point(entry.data, a, z), via_patch) <
                  1e-10);
        }
}

TEST_CASE("conjugation commutes with every transformation") {
    const auto d = catalog_entry("enneper").data;
    const Mat3c j = conjugation_matrix();
    for (const Mat3c& a : {duality_matrix(), lopez_ros_matrix(2.0)}) {
        CHECK(mat_gap_c(j * a, a * j) < 1e-15);
        const SplitComplex z{0.4, -0.3};
        CHECK(vec_gap(transform_point(d, j * a, z),
                      transform_point(d, a * j, z)) < 1e-12);
    }
}

TEST_CASE("dual data: printed coefficient, Hopf relation, K sign") {
    const auto d = catalog_entry("enneper").data;
    const auto dd = dual_data(d);

    // eta_D for (z, 1) data simplifies to ((1+j) - (1-j) z^2) / 2.
    for (const SplitComplex z :
         {SplitComplex{0.5, 0.2}, SplitComplex{-0.4, 0.9}}) {
        const SplitComplex zz = z * z;
        const SplitComplex want =
            0.5 * (SplitComplex{1.0, 1.0} -
                   SplitComplex{1.0, -1.0} * zz);
        CHECK(pc_gap(expr::eval_jet(dd.eta_hat, z).f, want) < 1e-12);
    }

    // eta_D dh_D = j eta dh.
    const SplitComplex z{0.5, 0.2};
    const Jet2 h = expr::eval_jet(d.h, z), e = expr::eval_jet(d.eta_hat, z);
    const Jet2 hd = expr::eval_jet(dd.h, z),
               ed = expr::eval_jet(dd.eta_hat, z);
    CHECK(pc_gap(ed.f * hd.df, kJ * (e.f * h.df)) < 1e-12);

    for (const SplitComplex p :
         {SplitComplex{0.3, 0.1}, SplitComplex{0.8, 0.2},
          SplitComplex{0.5, -0.3}, SplitComplex{1.3, 0.4},
          SplitComplex{0.9, -0.6}}) {
        const double k = curvature_jet(d, p).K;
        const double kd = curvature_jet(dd, p).K;
        CHECK(k * kd < 0.0);
    }
}

TEST_CASE("lopez-ros data: fixed forms and the printed family") {
    const auto d = catalog_entry("enneper").data;

    const auto unchanged = lopez_ros_data(d, 1.0);
    for (const SplitComplex z :
         {SplitComplex{0.3, 0.1}, SplitComplex{-0.7, 0.4}}) {
        CHECK(vec_gap(evaluate(unchanged, z), evaluate(d, z)) < 1e-12);
    }

    const auto moved = lopez_ros_data(d, 2.0);
    for (const SplitComplex z :
         {SplitComplex{0.3, 0.1}, SplitComplex{0.6, -0.5}}) {
        const auto a = curvature_jet(d, z), b = curvature_jet(moved, z);
        CHECK(a.Q == doctest::Approx(b.Q).epsilon(1e-10));
        CHECK(a.R == doctest::Approx(b.R).epsilon(1e-10));
    }

    // The elliptic catenoid's deformation family as data.
    const auto bonnet = catalog_entry("bonnet", 1.5).data;
    const auto direct =
        lopez_ros_data(catalog_entry("elliptic-catenoid").data, 1.5);
    for (const SplitComplex z :
         {SplitComplex{0.2, 0.3}, SplitComplex{-0.4, 0.1}}) {
        CHECK(pc_gap(expr::eval_jet(bonnet.h, z).f,
                     expr::eval_jet(direct.h, z).f) < 1e-13);
        CHECK(pc_gap(expr::eval_jet(bonnet.eta_hat, z).f,
                     expr::eval_jet(direct.eta_hat, z).f) < 1e-13);
        const SplitComplex want =
            (1.0 / 3.0) * (pcos(z).f * pcos(z).f);
        CHECK(pc_gap(expr::eval_jet(direct.eta_hat, z).f, want) < 1e-13);
    }

    const auto bad =
        oracle::error_code_of([&] { lopez_ros_data(d, 0.0); });
    REQUIRE(bad.has_value());
    CHECK(*bad == ErrorCode::DomainError);
}

TEST_CASE("image nullity is preserved by conformal frames") {
    const auto d = catalog_entry("enneper").data;
    const Mat3c a = lopez_ros_matrix(2.0) * anti_isometric_matrix(0.4);
    const SplitComplex c = conformal_check(a);
    for (const SplitComplex z :
         {SplitComplex{0.3, 0.1}, SplitComplex{-0.5, 0.8}}) {
        const Vec3c w = omega_at(d, z);
        const Vec3c aw = a * w;
        // <A omega, A omega> = c <omega, omega> = 0.
        CHECK(component_norm(minkowski_c(aw, aw)) < 1e-12);
        CHECK(component_norm(c) > 0.0);
    }
}

TEST_CASE("duality is an involution at the matrix level") {
    const Mat3c d2 = duality_matrix() * duality_matrix();
    CHECK(mat_gap_c(d2, complexify(kIdentity)) < 1e-15);
    const auto data = catalog_entry("enneper").data;
    const SplitComplex z{0.6, 0.1};
    CHECK(vec_gap(transform_point(data, d2, z),
                  transform_point(data, complexify(kIdentity), z)) < 1e-12);
}
