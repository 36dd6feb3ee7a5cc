#pragma once

// Small fixed-size linear algebra over R and over the split-complex ring,
// with the Lorentz inner product of signature (-, +, +).

#include <array>
#include <cmath>

#include "lwz/paracomplex.hpp"

namespace lwz {

using Vec3 = std::array<double, 3>;
using Vec3c = std::array<SplitComplex, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat3c = std::array<std::array<SplitComplex, 3>, 3>;

// ---------------------------------------------------------------------------
// Real vectors
// ---------------------------------------------------------------------------

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
inline Vec3 operator*(double s, const Vec3& a) {
    return {s * a[0], s * a[1], s * a[2]};
}

/// <a, b> = -a1 b1 + a2 b2 + a3 b3.
inline double minkowski(const Vec3& a, const Vec3& b) {
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double euclidean_norm(const Vec3& a) {
    return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}

inline double max_abs(const Vec3& a) {
    return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

/// Lorentz cross product: <a x b, c> = det(a, b, c) for all c, which works
/// out to the Euclidean cross product with its first component negated.
inline Vec3 lorentz_cross(const Vec3& a, const Vec3& b) {
    const Vec3 e{a[1] * b[2] - a[2] * b[1],
                 a[2] * b[0] - a[0] * b[2],
                 a[0] * b[1] - a[1] * b[0]};
    return {-e[0], e[1], e[2]};
}

// ---------------------------------------------------------------------------
// Split-complex vectors
// ---------------------------------------------------------------------------

inline Vec3c operator+(const Vec3c& a, const Vec3c& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3c operator-(const Vec3c& a, const Vec3c& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3c operator*(SplitComplex s, const Vec3c& a) {
    return {s * a[0], s * a[1], s * a[2]};
}

inline Vec3c pc_conj(const Vec3c& a) {
    return {pc_conj(a[0]), pc_conj(a[1]), pc_conj(a[2])};
}

/// Bilinear (not sesquilinear) extension of the Lorentz product.
inline SplitComplex minkowski_c(const Vec3c& a, const Vec3c& b) {
    return -(a[0] * b[0]) + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 real_part(const Vec3c& a) { return {a[0].re, a[1].re, a[2].re}; }
inline Vec3 imag_part(const Vec3c& a) { return {a[0].im, a[1].im, a[2].im}; }

inline Vec3c complexify(const Vec3& a) {
    return {SplitComplex{a[0]}, SplitComplex{a[1]}, SplitComplex{a[2]}};
}

inline double component_norm(const Vec3c& a) {
    return std::sqrt(a[0].re * a[0].re + a[0].im * a[0].im +
                     a[1].re * a[1].re + a[1].im * a[1].im +
                     a[2].re * a[2].re + a[2].im * a[2].im);
}

// ---------------------------------------------------------------------------
// Real matrices
// ---------------------------------------------------------------------------

inline constexpr Mat3 kIdentity{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

/// Gram matrix of the Lorentz product, diag(-1, 1, 1).
inline constexpr Mat3 kSignature{{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l)
                c[i][k] += a[i][l] * b[l][k];
    return c;
}

inline Vec3 operator*(const Mat3& a, const Vec3& x) {
    Vec3 y{};
    for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l)
            y[i] += a[i][l] * x[l];
    return y;
}

inline Mat3 operator-(const Mat3& a) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            c[i][k] = -a[i][k];
    return c;
}

inline Mat3 transpose(const Mat3& a) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            c[i][k] = a[k][i];
    return c;
}

inline double det(const Mat3& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

inline double trace(const Mat3& a) { return a[0][0] + a[1][1] + a[2][2]; }

inline double max_abs(const Mat3& a) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            m = std::max(m, std::abs(a[i][k]));
    return m;
}

inline Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            c[i][k] = a[i][k] - b[i][k];
    return c;
}

/// Whether tO diag(-1,1,1) O = diag(-1,1,1) within tolerance tau.
inline bool is_lorentz(const Mat3& o, double tau) {
    const Mat3 g = transpose(o) * (kSignature * o);
    return max_abs(g - kSignature) <= tau;
}

// ---------------------------------------------------------------------------
// Split-complex matrices
// ---------------------------------------------------------------------------

inline Mat3c complexify(const Mat3& a) {
    Mat3c c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            c[i][k] = SplitComplex{a[i][k]};
    return c;
}

inline Mat3 real_part(const Mat3c& a) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            c[i][k] = a[i][k].re;
    return c;
}

inline Mat3 imag_part(const Mat3c& a) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            c[i][k] = a[i][k].im;
    return c;
}

inline Mat3c operator*(const Mat3c& a, const Mat3c& b) {
    Mat3c c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l)
                c[i][k] = c[i][k] + a[i][l] * b[l][k];
    return c;
}

inline Vec3c operator*(const Mat3c& a, const Vec3c& x) {
    Vec3c y{};
    for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l)
            y[i] = y[i] + a[i][l] * x[l];
    return y;
}

inline Mat3c operator*(SplitComplex s, const Mat3c& a) {
    Mat3c c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            c[i][k] = s * a[i][k];
    return c;
}

inline Mat3c transpose(const Mat3c& a) {
    Mat3c c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            c[i][k] = a[k][i];
    return c;
}

inline Mat3c pc_conj(const Mat3c& a) {
    Mat3c c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            c[i][k] = pc_conj(a[i][k]);
    return c;
}

inline SplitComplex det(const Mat3c& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

inline Mat3c adjugate(const Mat3c& a) {
    Mat3c c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            const int r0 = (k + 1) % 3, r1 = (k + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            c[i][k] = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
        }
    return c;
}

/// Inverse via adjugate; requires det to be invertible in the ring.
/// Throws SingularMatrix on a lightlike (or zero) determinant.
inline Mat3c inverse_c(const Mat3c& a) {
    const SplitComplex d = det(a);
    if (is_zero_divisor(d))
        fail(ErrorCode::SingularMatrix,
             "matrix determinant is a zero divisor");
    Mat3c adj = adjugate(a);
    Mat3c c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            c[i][k] = pc_div(adj[i][k], d);
    return c;
}

inline double max_abs(const Mat3c& a) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            m = std::max(m, std::max(std::abs(a[i][k].re),
                                     std::abs(a[i][k].im)));
    return m;
}

inline Mat3c operator-(const Mat3c& a, const Mat3c& b) {
    Mat3c c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            c[i][k] = a[i][k] - b[i][k];
    return c;
}

} // namespace lwz
