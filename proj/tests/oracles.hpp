#pragma once

// Independent reference computations for the tests: truncated power series
// for the elementary functions, difference quotients, and a shape operator
// rebuilt from positions and normals alone.  Nothing here shares code with
// the library paths under test beyond scalar arithmetic.

#include <cmath>
#include <functional>
#include <optional>

#include "lwz/errors.hpp"
#include "lwz/weierstrass.hpp"

namespace oracle {

using lwz::SplitComplex;
using lwz::Vec3;
using lwz::operator+;
using lwz::operator-;
using lwz::operator*;

/// exp as its defining series; converges fast for |components| < ~20.
inline SplitComplex series_pexp(SplitComplex z, int terms = 40) {
    SplitComplex sum{1.0, 0.0};
    SplitComplex term{1.0, 0.0};
    for (int k = 1; k < terms; ++k) {
        term = (1.0 / k) * (term * z);
        sum = sum + term;
    }
    return sum;
}

/// cos series; with j^2 = 1 the even powers mix components but the
/// coefficients are the real ones.
inline SplitComplex series_pcos(SplitComplex z, int terms = 20) {
    SplitComplex sum{1.0, 0.0};
    SplitComplex term{1.0, 0.0};
    for (int k = 1; k < terms; ++k) {
        term = (-1.0 / ((2.0 * k - 1.0) * (2.0 * k))) * (term * z * z);
        sum = sum + term;
    }
    return sum;
}

inline SplitComplex series_psin(SplitComplex z, int terms = 20) {
    SplitComplex sum = z;
    SplitComplex term = z;
    for (int k = 1; k < terms; ++k) {
        term = (-1.0 / ((2.0 * k) * (2.0 * k + 1.0))) * (term * z * z);
        sum = sum + term;
    }
    return sum;
}

/// Central difference d/dx; equals d/dz on paraholomorphic functions.
inline SplitComplex diff_z(
    const std::function<SplitComplex(SplitComplex)>& f, SplitComplex z,
    double h = 1e-5) {
    return (1.0 / (2.0 * h)) *
           (f({z.re + h, z.im}) - f({z.re - h, z.im}));
}

struct ShapeEstimate {
    double K;
    double H;
};

/// Shape operator S = I^{-1} II from sampled positions and normals only:
/// K = det S, H = tr S / 2.  No jets, no Hopf decomposition.
inline ShapeEstimate fd_shape(const lwz::WeierstrassData& d, SplitComplex z,
                              double h = 1e-4) {
    const auto f = [&](double x, double y) {
        return lwz::evaluate(d, {x, y});
    };
    const auto n = [&](double x, double y) {
        return lwz::unit_normal(d, {x, y});
    };
    const Vec3 fx = (1.0 / (2.0 * h)) * (f(z.re + h, z.im) - f(z.re - h, z.im));
    const Vec3 fy = (1.0 / (2.0 * h)) * (f(z.re, z.im + h) - f(z.re, z.im - h));
    const Vec3 nx = (1.0 / (2.0 * h)) * (n(z.re + h, z.im) - n(z.re - h, z.im));
    const Vec3 ny = (1.0 / (2.0 * h)) * (n(z.re, z.im + h) - n(z.re, z.im - h));
    const double E = lwz::minkowski(fx, fx);
    const double F = lwz::minkowski(fx, fy);
    const double G = lwz::minkowski(fy, fy);
    // <n, f_xy> = -<n_x, f_y> = -<n_y, f_x>; average the two estimates.
    const double e = -lwz::minkowski(nx, fx);
    const double m = -0.5 * (lwz::minkowski(nx, fy) + lwz::minkowski(ny, fx));
    const double g = -lwz::minkowski(ny, fy);
    const double det1 = E * G - F * F;
    return {(e * g - m * m) / det1,
            (e * G - 2.0 * m * F + g * E) / (2.0 * det1)};
}

template <typename Fn>
inline std::optional<lwz::ErrorCode> error_code_of(Fn&& fn) {
    try {
        fn();
    } catch (const lwz::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline double vec_gap(const Vec3& a, const Vec3& b) {
    return lwz::euclidean_norm(a - b);
}

inline double pc_gap(SplitComplex a, SplitComplex b) {
    return lwz::component_norm(a - b);
}

} // namespace oracle
