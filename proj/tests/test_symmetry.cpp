#include <doctest.h>

#include <cmath>

#include "lwz/catalog.hpp"
#include "lwz/goursat.hpp"
#include "lwz/symmetry.hpp"
#include "oracles.hpp"

using namespace lwz;
using oracle::vec_gap;

namespace {

Mat3 diag(double a, double b, double c) {
    return {{{a, 0.0, 0.0}, {0.0, b, 0.0}, {0.0, 0.0, c}}};
}

double mat_gap(const Mat3& a, const Mat3& b) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            worst = std::max(worst, std::abs(a[i][k] - b[i][k]));
    return worst;
}

const DomainIsometry kNegZ{{-1.0, 0.0}, {}, false};
const DomainIsometry kConjZ{{1.0, 0.0}, {}, true};
const DomainIsometry kNegConjZ{{-1.0, 0.0}, {}, true};

DomainIsometry shift(SplitComplex b) { return {{1.0, 0.0}, b, false}; }

} // namespace

TEST_CASE("pullback residuals accept the printed pairs and reject others") {
    const Surface f{catalog_entry("enneper").data};
    const auto samples = sample_random({-0.9, 0.9, -0.9, 0.9}, 10, 21);

    CHECK(pullback_residual(f, kNegZ, diag(-1.0, -1.0, 1.0), {}, samples) <
          1e-10);
    CHECK(pullback_residual(f, kConjZ, diag(1.0, -1.0, 1.0), {}, samples) <
          1e-10);
    CHECK(pullback_residual(f, kNegZ, kIdentity, {}, samples) > 0.1);
}

TEST_CASE("detect recovers linear parts and translations") {
    const auto entry = catalog_entry("elliptic-catenoid");
    const Surface f{entry.data};
    const auto samples = sample_random({-0.9, 0.9, -0.9, 0.9}, 10, 22);
    const double pi = std::numbers::pi;

    const auto closed = detect(f, shift({0.0, pi}), samples);
    REQUIRE(closed.has_value());
    CHECK(mat_gap(closed->linear, kIdentity) < 1e-9);
    CHECK(closed->translation_vanishes);
    CHECK(!closed->orientation_reversing);

    const auto translating = detect(f, shift({pi, 0.0}), samples);
    REQUIRE(translating.has_value());
    CHECK(mat_gap(translating->linear, kIdentity) < 1e-9);
    CHECK(vec_gap(translating->translation, {-pi / 2.0, 0.0, 0.0}) < 1e-9);
    CHECK(!translating->translation_vanishes);

    const Surface enneper{catalog_entry("enneper").data};
    CHECK(!detect(enneper, shift({1.0, 0.0}), samples).has_value());
}

TEST_CASE("detect rejections") {
    const Surface f{catalog_entry("enneper").data};
    const auto samples = sample_random({-0.9, 0.9, -0.9, 0.9}, 10, 23);

    const auto scaling = oracle::error_code_of([&] {
        detect(f, DomainIsometry{{2.0, 0.0}, {}, false}, samples);
    });
    REQUIRE(scaling.has_value());
    CHECK(*scaling == ErrorCode::Validation);

    const auto few = oracle::error_code_of([&] {
        detect(f, kNegZ,
               std::vector<SplitComplex>(samples.begin(),
                                         samples.begin() + 5));
    });
    REQUIRE(few.has_value());
    CHECK(*few == ErrorCode::Validation);

    const auto repeated = oracle::error_code_of([&] {
        detect(f, kNegZ,
               std::vector<SplitComplex>(8, SplitComplex{0.4, 0.2}));
    });
    REQUIRE(repeated.has_value());
    CHECK(*repeated == ErrorCode::IllConditioned);
}

TEST_CASE("propagation through the named matrices") {
    // Conjugating symmetry through duality: diag(1,-1,1) -> diag(-1,-1,1).
    const auto dual =
        propagate_linear(duality_matrix(), diag(1.0, -1.0, 1.0), true);
    REQUIRE(dual.has_value());
    CHECK(mat_gap(*dual, diag(-1.0, -1.0, 1.0)) < 1e-12);

    // A nonzero family angle kills every conjugating symmetry.
    CHECK(!propagate_linear(associated_matrix(0.4), diag(1.0, -1.0, 1.0),
                            true)
               .has_value());
    CHECK(!propagate_linear(associated_matrix(-1.1), kIdentity, true)
               .has_value());

    // Translations (identity linear part) survive everything.
    for (const Mat3c& a :
         {duality_matrix(), lopez_ros_matrix(3.0), associated_matrix(0.8),
          anti_isometric_matrix(-0.5)}) {
        const auto kept = propagate_linear(a, kIdentity, false);
        REQUIRE(kept.has_value());
        CHECK(mat_gap(*kept, kIdentity) < 1e-12);
    }
}

TEST_CASE("propagated parts match direct detection on the image") {
    const auto entry = catalog_entry("enneper");
    const auto samples = sample_random({-0.9, 0.9, -0.9, 0.9}, 10, 24);
    const Mat3c a = duality_matrix();

    for (const auto& fix : entry.symmetries) {
        const auto prop =
            propagate_linear(a, fix.linear, fix.map.conjugating);
        const Surface image{entry.data, a, false};
        const auto found = detect(image, fix.map, samples);
        REQUIRE(prop.has_value() == found.has_value());
        if (prop)
            CHECK(mat_gap(*prop, found->linear) < 1e-7);
    }
}

TEST_CASE("family survival pattern") {
    const auto d = catalog_entry("enneper").data;
    const auto samples = sample_random({-0.9, 0.9, -0.9, 0.9}, 10, 25);
    const std::vector<double> thetas{-1.0, -0.5, 0.0, 0.5, 1.0};

    for (const FamilyKind kind :
         {FamilyKind::Associated, FamilyKind::AntiIsometric}) {
        const auto rows = family_report(d, kNegZ, kind, thetas, samples);
        for (const auto& row : rows) {
            CHECK(row.survives);
            CHECK(mat_gap(row.linear, diag(-1.0, -1.0, 1.0)) < 1e-7);
        }
    }

    const auto assoc =
        family_report(d, kConjZ, FamilyKind::Associated, thetas, samples);
    const auto anti =
        family_report(d, kConjZ, FamilyKind::AntiIsometric, thetas, samples);
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        const bool zero = thetas[i] == 0.0;
        CHECK(assoc[i].survives == zero);
        CHECK(anti[i].survives == zero);
        if (zero) {
            CHECK(mat_gap(assoc[i].linear, diag(1.0, -1.0, 1.0)) < 1e-7);
            CHECK(mat_gap(anti[i].linear, diag(-1.0, 1.0, -1.0)) < 1e-7);
        }
    }
}

TEST_CASE("period lifts reproduce the closed translations") {
    const double pi = std::numbers::pi;
    const auto ec = catalog_entry("elliptic-catenoid").data;
    CHECK(vec_gap(real_part(period_lift(ec, {pi, 0.0})),
                  {-pi / 2.0, 0.0, 0.0}) < 1e-10);
    CHECK(euclidean_norm(real_part(period_lift(ec, {0.0, pi}))) < 1e-10);

    for (const double lambda : {1.0, 1.7}) {
        const auto b = catalog_entry("bonnet", lambda).data;
        const Vec3 t = real_part(period_lift(b, {0.0, pi}));
        const Vec3 want{0.0, -pi / 4.0 * (lambda - 1.0 / lambda), 0.0};
        CHECK(vec_gap(t, want) < 1e-9);
    }
}

TEST_CASE("timelike line symmetry spawns the full quadruple") {
    auto helix = scale_eta(catalog_entry("elliptic-catenoid").data, kJ);
    helix.base_value = {};
    const auto samples = sample_random({-0.9, 0.9, -0.9, 0.9}, 10, 26);

    const auto quad = quadruple(helix, kNegConjZ, samples);
    CHECK(quad[0].surface == QuadrupleSurface::Base);
    CHECK(quad[1].surface == QuadrupleSurface::Conjugate);
    CHECK(quad[2].surface == QuadrupleSurface::Dual);
    CHECK(quad[3].surface == QuadrupleSurface::ConjugateDual);

    const Mat3 o = diag(1.0, -1.0, -1.0);
    CHECK(mat_gap(quad[0].linear, o) < 1e-7);
    CHECK(mat_gap(quad[1].linear, -o) < 1e-7);
    CHECK(mat_gap(quad[2].linear, -kIdentity) < 1e-7);
    CHECK(mat_gap(quad[3].linear, kIdentity) < 1e-7);
    for (const auto& part : quad) {
        CHECK(part.residual < 1e-6);
        CHECK(euclidean_norm(part.translation) < 1e-6);
    }

    // Preconditions: the map must conjugate, and the linear part must be a
    // half-turn about a timelike axis.
    const auto preserving =
        oracle::error_code_of([&] { quadruple(helix, kNegZ, samples); });
    REQUIRE(preserving.has_value());
    CHECK(*preserving == ErrorCode::NotALineSymmetry);

    const auto reflection = oracle::error_code_of([&] {
        quadruple(catalog_entry("enneper").data, kConjZ, samples);
    });
    REQUIRE(reflection.has_value());
    CHECK(*reflection == ErrorCode::NotALineSymmetry);
}

TEST_CASE("orientation bookkeeping") {
    CHECK(!orientation_reversing(kNegZ));
    CHECK(orientation_reversing(kConjZ));
    CHECK(orientation_reversing(DomainIsometry{kJ, {}, false}));

    const Surface f{catalog_entry("enneper").data};
    const auto samples = sample_random({-0.9, 0.9, -0.9, 0.9}, 10, 27);
    const auto rot = detect(f, kNegZ, samples);
    REQUIRE(rot.has_value());
    CHECK(!rot->orientation_reversing);
    const auto refl = detect(f, kConjZ, samples);
    REQUIRE(refl.has_value());
    CHECK(refl->orientation_reversing);
}
