#include <doctest.h>

#include <random>
#include <vector>

#include "lwz/expr.hpp"
#include "oracles.hpp"

using namespace lwz;
using oracle::pc_gap;

TEST_CASE("parse basics and canonical form") {
    CHECK(expr::parse("z")->kind == expr::NodeKind::Variable);

    // "a+bj" folds into a single literal node.
    const auto lit = expr::parse("1 - 0.5j");
    REQUIRE(lit->kind == expr::NodeKind::Literal);
    CHECK(lit->value.re == 1.0);
    CHECK(lit->value.im == -0.5);

    const auto e = expr::parse("0.5*pcos(z)^2");
    REQUIRE(e->kind == expr::NodeKind::Mul);
    CHECK(e->lhs->kind == expr::NodeKind::Literal);
    CHECK(e->rhs->kind == expr::NodeKind::Pow);
    CHECK(e->rhs->lhs->kind == expr::NodeKind::Call);
}

TEST_CASE("print and reparse are stable") {
    const std::vector<std::string> sources = {
        "z",
        "0.5*pcos(z)^2",
        "((1+j)*z + (1-j)/z)/2",
        "-z^3 + 2*z - 1",
        "psin(z)*pcos(z)/2",
        "ptan(z)^-2",
        "pexp(z)*pexp(z/2)*1.5j",
    };
    for (const auto& src : sources) {
        const auto once = expr::parse(src);
        const auto twice = expr::parse(expr::print(once));
        CHECK(expr::structurally_equal(once, twice));
        CHECK(expr::print(once) == expr::print(twice));
    }
}

TEST_CASE("syntax errors carry byte offsets") {
    const auto check_offset = [](const std::string& src, std::size_t want) {
        try {
            expr::parse(src);
            FAIL("no error for " << src);
        } catch (const SyntaxError& e) {
            CHECK(e.code() == ErrorCode::Syntax);
            CHECK(e.offset() == want);
            CHECK(!e.expected().empty());
        }
    };
    check_offset("z + * 2", 4);
    check_offset("1 + * 2", 4);
    check_offset("pexp(", 5);
    check_offset("pexp 2", 5);
    check_offset("frob(z)", 0);
}

TEST_CASE("eval_jet on hand-expanded cases") {
    const auto sq = expr::parse("z^2");
    const Jet2 j = expr::eval_jet(sq, SplitComplex{1.0, 1.0});
    CHECK(pc_gap(j.f, {2.0, 2.0}) == 0.0);
    CHECK(pc_gap(j.df, {2.0, 2.0}) == 0.0);
    CHECK(pc_gap(j.d2f, {2.0, 0.0}) == 0.0);

    const auto id = expr::parse("z");
    const Jet2 i = expr::eval_jet(id, SplitComplex{0.3, -0.7});
    CHECK(pc_gap(i.f, {0.3, -0.7}) == 0.0);
    CHECK(pc_gap(i.df, {1.0, 0.0}) == 0.0);
    CHECK(pc_gap(i.d2f, {0.0, 0.0}) == 0.0);

    const auto tan_pole = oracle::error_code_of([] {
        expr::eval_jet(expr::parse("ptan(z)"),
                       SplitComplex{std::numbers::pi / 4.0,
                                    std::numbers::pi / 4.0});
    });
    REQUIRE(tan_pole.has_value());
    CHECK(*tan_pole == ErrorCode::ZeroDivisor);
}

TEST_CASE("negative powers and their error cases") {
    const auto inv = expr::parse("z^-2");
    const Jet2 j = expr::eval_jet(inv, SplitComplex{2.0, 0.0});
    CHECK(j.f.re == doctest::Approx(0.25));
    CHECK(j.df.re == doctest::Approx(-0.25));

    const auto at_zero = oracle::error_code_of(
        [&] { expr::eval_jet(inv, SplitComplex{0.0, 0.0}); });
    REQUIRE(at_zero.has_value());
    const auto lightlike = oracle::error_code_of(
        [&] { expr::eval_jet(inv, SplitComplex{1.0, 1.0}); });
    REQUIRE(lightlike.has_value());
}

namespace {

// Random total expressions: no division, no ptan, so every tree evaluates
// everywhere.
expr::NodePtr random_ast(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
    switch (pick(rng)) {
    case 0:
        return expr::variable();
    case 1: {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        return expr::literal({u(rng), u(rng)});
    }
    case 2:
        return expr::add(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 3:
        return expr::sub(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 4:
        return expr::mul(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 5:
        return expr::neg(random_ast(rng, depth - 1));
    case 6: {
        std::uniform_int_distribution<int> p(2, 3);
        return expr::pow(random_ast(rng, depth - 1), p(rng));
    }
    default: {
        std::uniform_int_distribution<int> f(0, 2);
        const int which = f(rng);
        const expr::Func fn = which == 0   ? expr::Func::Pexp
                              : which == 1 ? expr::Func::Pcos
                                           : expr::Func::Psin;
        return expr::call(fn, random_ast(rng, depth - 1));
    }
    }
}

} // namespace

TEST_CASE("random trees: derivatives match difference quotients") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    int checked = 0;
    for (int i = 0; i < 50; ++i) {
        const auto ast = random_ast(rng, 3);
        const auto roundtrip = expr::parse(expr::print(ast));
        CHECK(expr::structurally_equal(ast, roundtrip));
        for (int k = 0; k < 3; ++k) {
            const SplitComplex z{u(rng), u(rng)};
            const Jet2 jet = expr::eval_jet(ast, z);
            const auto value = [&](SplitComplex w) {
                return expr::eval_jet(ast, w).f;
            };
            const double scale =
                std::max(1.0, component_norm(jet.df));
            CHECK(pc_gap(jet.df, oracle::diff_z(value, z)) / scale < 1e-6);
            CHECK(wirtinger_residual(value, z) / scale < 1e-6);
            ++checked;
        }
    }
    CHECK(checked == 150);
}
