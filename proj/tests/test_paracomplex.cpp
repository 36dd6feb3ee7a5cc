#include <doctest.h>

#include <cmath>
#include <random>

#include "lwz/paracomplex.hpp"
#include "oracles.hpp"

using namespace lwz;
using oracle::pc_gap;

TEST_CASE("split-complex algebra basics") {
    CHECK(modulus_sq({1.0, 1.0}) == 0.0);
    CHECK(pc_gap(kJ * kJ, {1.0, 0.0}) == 0.0);

    const SplitComplex z{0.7, -1.3};
    CHECK(pc_gap(pc_conj(pc_conj(z)), z) == 0.0);
    CHECK(modulus_sq(kJ * z) == doctest::Approx(-modulus_sq(z)));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const SplitComplex a{u(rng), u(rng)}, b{u(rng), u(rng)};
        CHECK(modulus_sq(a * b) ==
              doctest::Approx(modulus_sq(a) * modulus_sq(b)).epsilon(1e-12));
    }
}

TEST_CASE("null coordinates multiply componentwise") {
    const SplitComplex z{0.3, 0.4}, w{-1.1, 0.2};
    const NullPair p = null_split(z), q = null_split(w), r = null_split(z * w);
    CHECK(r.u == doctest::Approx(p.u * q.u));
    CHECK(r.v == doctest::Approx(p.v * q.v));
    CHECK(pc_gap(recompose(null_split(z)), z) < 1e-16);
}

TEST_CASE("zero divisors are exactly the lightlike lines") {
    CHECK(is_zero_divisor({1.0, 1.0}));
    CHECK(is_zero_divisor({-0.5, 0.5}));
    CHECK(is_zero_divisor({0.0, 0.0}));
    CHECK(!is_zero_divisor({1.0, 0.99}));
    const auto code = oracle::error_code_of(
        [] { return pc_div({1.0, 0.0}, {2.0, 2.0}); });
    REQUIRE(code.has_value());
    CHECK(*code == ErrorCode::ZeroDivisor);
}

TEST_CASE("pexp matches its power series and closed form") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 30; ++i) {
        const SplitComplex z{u(rng), u(rng)};
        const SplitComplex v = pexp(z).f;
        CHECK(pc_gap(v, oracle::series_pexp(z)) < 1e-13);
        const SplitComplex closed{std::exp(z.re) * std::cosh(z.im),
                                  std::exp(z.re) * std::sinh(z.im)};
        CHECK(pc_gap(v, closed) < 1e-13);
    }
    // e^{j theta} lies on the unit pseudo-circle and is real only at 0.
    CHECK(modulus_sq(pexp({0.0, 0.8}).f) == doctest::Approx(1.0));
    CHECK(pexp({0.0, 0.8}).f.im != 0.0);
    CHECK(pc_gap(pexp({0.0, 0.0}).f, {1.0, 0.0}) == 0.0);
}

TEST_CASE("pexp addition theorem and overflow guard") {
    const SplitComplex z{0.4, -0.9}, w{-1.2, 0.35};
    CHECK(pc_gap(pexp(z + w).f, pexp(z).f * pexp(w).f) < 1e-14);
    const auto code = oracle::error_code_of([] { pexp({450.0, 300.0}); });
    REQUIRE(code.has_value());
    CHECK(*code == ErrorCode::Overflow);
}

TEST_CASE("pcos and psin match their series") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 30; ++i) {
        const SplitComplex z{u(rng), u(rng)};
        CHECK(pc_gap(pcos(z).f, oracle::series_pcos(z)) < 1e-13);
        CHECK(pc_gap(psin(z).f, oracle::series_psin(z)) < 1e-13);
        const SplitComplex pyth =
            pcos(z).f * pcos(z).f + psin(z).f * psin(z).f;
        CHECK(pc_gap(pyth, {1.0, 0.0}) < 1e-13);
    }
}

TEST_CASE("ptan pole policy") {
    const auto at_pole = oracle::error_code_of(
        [] { ptan({std::numbers::pi / 2.0, 0.0}); });
    REQUIRE(at_pole.has_value());
    CHECK(*at_pole == ErrorCode::ZeroDivisor);
    // pcos is lightlike (not zero) on x + y = pi/2.
    const auto lightlike = oracle::error_code_of(
        [] { ptan({std::numbers::pi / 4.0, std::numbers::pi / 4.0}); });
    REQUIRE(lightlike.has_value());
    CHECK(*lightlike == ErrorCode::ZeroDivisor);
    CHECK(pc_gap(ptan({0.4, 0.1}).f,
                 pc_div(psin({0.4, 0.1}).f, pcos({0.4, 0.1}).f)) < 1e-16);
}

TEST_CASE("jets obey the product and quotient rules") {
    const SplitComplex z{0.3, 0.2};
    const Jet2 s = psin(z), c = pcos(z);
    const Jet2 prod = s * c;
    CHECK(pc_gap(prod.df, s.df * c.f + s.f * c.df) < 1e-16);
    CHECK(pc_gap(prod.d2f, s.d2f * c.f + 2.0 * (s.df * c.df) + s.f * c.d2f) <
          1e-16);

    const Jet2 quot = s / c;
    CHECK(pc_gap(quot.f * c.f, s.f) < 1e-15);
    CHECK(pc_gap(quot.df * c.f + quot.f * c.df, s.df) < 1e-15);

    // d/dz psin = pcos, d/dz pcos = -psin.
    CHECK(pc_gap(s.df, c.f) < 1e-15);
    CHECK(pc_gap(c.df, -s.f) < 1e-15);
    CHECK(pc_gap(s.d2f, -s.f) < 1e-15);
}

TEST_CASE("jet chain rule against difference quotients") {
    const auto f = [](SplitComplex z) {
        return pexp(psin(z).f * SplitComplex{0.5, 0.0}).f;
    };
    const SplitComplex z{0.25, -0.4};
    const Jet2 inner = psin(z);
    const Jet2 outer = pexp(0.5 * inner.f);
    const Jet2 chained = jet_compose(outer.f, outer.df, outer.d2f,
                                     Jet2{inner.f, 0.5 * inner.df,
                                          0.5 * inner.d2f});
    CHECK(pc_gap(chained.df, oracle::diff_z(f, z)) < 1e-9);
}

TEST_CASE("wirtinger residual separates paraholomorphic from not") {
    const SplitComplex z{0.3, 0.7};
    CHECK(wirtinger_residual([](SplitComplex w) { return pcos(w).f; }, z) <
          1e-10);
    CHECK(wirtinger_residual([](SplitComplex w) { return w * w; }, z) <
          1e-10);
    CHECK(wirtinger_residual([](SplitComplex w) { return pc_conj(w); }, z) ==
          doctest::Approx(1.0));
}
