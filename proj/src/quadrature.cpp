#include "lwz/quadrature.hpp"

#include <cmath>

#include "lwz/errors.hpp"
#include "lwz/tolerances.hpp"

namespace lwz {

namespace {

// 15-point Kronrod abscissae on [-1, 1] (nonnegative half; the rule is
// symmetric) and the matching Kronrod and embedded 7-point Gauss weights.
constexpr double kX[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct RuleResult {
    Vec3c kronrod;
    double error;
};

RuleResult gk15(const SegmentIntegrand& g, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    Vec3c sk{}, sg{};
    std::array<Vec3c, 8> plus{}, minus{};
    for (int i = 0; i < 8; ++i) {
        plus[i] = g(c + h * kX[i]);
        minus[i] = i == 7 ? plus[i] : g(c - h * kX[i]);
    }
    for (int i = 0; i < 8; ++i) {
        const Vec3c s = i == 7 ? plus[i] : plus[i] + minus[i];
        sk = sk + SplitComplex{kWK[i]} * s;
    }
    // Gauss points are the odd-index Kronrod points.
    for (int i = 0; i < 4; ++i) {
        const int idx = 2 * i + 1;
        const Vec3c s =
            idx == 7 ? plus[idx] : plus[idx] + minus[idx];
        sg = sg + SplitComplex{kWG[i]} * s;
    }
    const Vec3c k15 = SplitComplex{h} * sk;
    const Vec3c g7 = SplitComplex{h} * sg;
    return {k15, component_norm(k15 - g7)};
}

void integrate_rec(const SegmentIntegrand& g, double a, double b,
                   double abs_tol, int depth, Vec3c& acc) {
    const RuleResult r = gk15(g, a, b);
    if (r.error <= abs_tol || (b - a) < 1e-14) {
        acc = acc + r.kronrod;
        return;
    }
    if (depth >= 30)
        fail(ErrorCode::Quadrature,
             "adaptive bisection exceeded 30 levels without convergence");
    const double m = 0.5 * (a + b);
    integrate_rec(g, a, m, 0.5 * abs_tol, depth + 1, acc);
    integrate_rec(g, m, b, 0.5 * abs_tol, depth + 1, acc);
}

} // namespace

Vec3c integrate_adaptive(const SegmentIntegrand& g, double a, double b,
                         double abs_tol) {
    Vec3c acc{};
    integrate_rec(g, a, b, abs_tol, 0, acc);
    return acc;
}

std::vector<std::pair<SplitComplex, SplitComplex>>
axis_aligned_legs(SplitComplex z0, SplitComplex z1, bool real_axis_first) {
    std::vector<std::pair<SplitComplex, SplitComplex>> legs;
    const SplitComplex corner = real_axis_first
                                    ? SplitComplex{z1.re, z0.im}
                                    : SplitComplex{z0.re, z1.im};
    if (!(corner == z0)) legs.emplace_back(z0, corner);
    if (!(corner == z1)) legs.emplace_back(corner, z1);
    return legs;
}

std::vector<std::pair<SplitComplex, SplitComplex>>
polyline_legs(const std::vector<SplitComplex>& points) {
    std::vector<std::pair<SplitComplex, SplitComplex>> legs;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (!(points[i] == points[i + 1]))
            legs.emplace_back(points[i], points[i + 1]);
    return legs;
}

Vec3c integrate_form(const std::function<Vec3c(SplitComplex)>& omega,
                     const std::vector<std::pair<SplitComplex, SplitComplex>>&
                         legs) {
    Vec3c total{};
    for (const auto& [za, zb] : legs) {
        const SplitComplex dz = zb - za;
        auto g = [&](double t) -> Vec3c {
            const SplitComplex z = za + t * dz;
            return dz * omega(z);
        };
        try {
            total = total + integrate_adaptive(g, 0.0, 1.0, tol::quadrature());
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Quadrature) throw;
            fail(ErrorCode::Path,
                 std::string("integration path crosses an evaluation "
                             "error: ") +
                     e.what());
        }
    }
    return total;
}

} // namespace lwz
