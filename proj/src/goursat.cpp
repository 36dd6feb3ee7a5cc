#include "lwz/goursat.hpp"

#include <cmath>

#include "lwz/tolerances.hpp"

namespace lwz {

SplitComplex conformal_check(const Mat3c& a) {
    const Mat3c g = complexify(kSignature);
    const Mat3c m = transpose(a) * (g * a);
    const SplitComplex c = -m[0][0]; // g00 = -1
    const double scale = std::max(1.0, max_abs(m));
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            const SplitComplex want = c * SplitComplex{kSignature[i][k]};
            const SplitComplex diff = m[i][k] - want;
            if (std::max(std::abs(diff.re), std::abs(diff.im)) >
                tol::conformal() * scale)
                fail(ErrorCode::NotConformal,
                     "matrix is not in the paracomplex conformal group");
        }
    if (is_zero_divisor(c))
        fail(ErrorCode::LightlikeFactor,
             "conformal factor is a zero divisor");
    return c;
}

namespace {

Mat3c scalar_matrix(SplitComplex s) {
    Mat3c m{};
    m[0][0] = m[1][1] = m[2][2] = s;
    return m;
}

SplitComplex hyperbolic_phase(double theta) {
    return {std::cosh(theta), std::sinh(theta)};
}

} // namespace

Mat3c conjugation_matrix() { return scalar_matrix(kJ); }

Mat3c duality_matrix() {
    Mat3c m{};
    m[0][0] = kJ;
    m[1][1] = m[2][2] = SplitComplex{1.0};
    return m;
}

Mat3c conj_duality_matrix() {
    Mat3c m{};
    m[0][0] = SplitComplex{1.0};
    m[1][1] = m[2][2] = kJ;
    return m;
}

Mat3c associated_matrix(double theta) {
    return scalar_matrix(hyperbolic_phase(theta));
}

Mat3c anti_isometric_matrix(double theta) {
    return scalar_matrix(kJ * hyperbolic_phase(theta));
}

Mat3c lopez_ros_matrix(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        fail(ErrorCode::DomainError,
             "Lopez-Ros parameter must be a positive real number");
    const double a = 0.5 * (lambda + 1.0 / lambda);
    const double b = 0.5 * (lambda - 1.0 / lambda);
    Mat3c m{};
    m[0][0] = m[1][1] = SplitComplex{a};
    m[0][1] = m[1][0] = SplitComplex{0.0, b};
    m[2][2] = SplitComplex{1.0};
    return m;
}

Vec3 transform_point(const WeierstrassData& d, const Mat3c& a,
                     SplitComplex z, PathRoute route) {
    return real_part(a * integral_lift(d, z, route));
}

WeierstrassData dual_data(const WeierstrassData& d) {
    using namespace expr;
    const NodePtr half = literal(SplitComplex{0.5});
    const NodePtr ep = literal(SplitComplex{1.0, 1.0});  // 1 + j
    const NodePtr em = literal(SplitComplex{1.0, -1.0}); // 1 - j

    WeierstrassData out;
    out.h = mul(half, sub(mul(ep, d.h), div(em, d.h)));
    out.eta_hat = mul(half, sub(mul(ep, d.eta_hat), mul(em, d.h2_eta)));
    out.h_eta = d.h_eta; // h_D eta_D = h eta identically
    out.h2_eta = mul(half, sub(mul(ep, d.h2_eta), mul(em, d.eta_hat)));
    out.base_point = d.base_point;
    out.base_value = {};
    return out;
}

WeierstrassData lopez_ros_data(const WeierstrassData& d, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        fail(ErrorCode::DomainError,
             "Lopez-Ros parameter must be a positive real number");
    using namespace expr;
    WeierstrassData out;
    out.h = mul(literal(SplitComplex{lambda}), d.h);
    out.eta_hat = mul(literal(SplitComplex{1.0 / lambda}), d.eta_hat);
    out.h_eta = d.h_eta; // (lambda h)(eta/lambda) = h eta
    out.h2_eta = mul(literal(SplitComplex{lambda}), d.h2_eta);
    out.base_point = d.base_point;
    out.base_value = d.base_value;
    return out;
}

} // namespace lwz
