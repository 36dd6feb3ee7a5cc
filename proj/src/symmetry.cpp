#include "lwz/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <numbers>

#include "lwz/domain.hpp"
#include "lwz/goursat.hpp"
#include "lwz/tolerances.hpp"

namespace lwz {
namespace {

// Eigenvalues of a symmetric 3x3 matrix by the trigonometric closed form.
std::array<double, 3> symmetric_eigenvalues(const Mat3& m) {
    const double p1 =
        m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    if (p1 == 0.0)
        return {m[0][0], m[1][1], m[2][2]};
    const double q = trace(m) / 3.0;
    const double p2 = (m[0][0] - q) * (m[0][0] - q) +
                      (m[1][1] - q) * (m[1][1] - q) +
                      (m[2][2] - q) * (m[2][2] - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    Mat3 b{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            b[i][k] = (m[i][k] - (i == k ? q : 0.0)) / p;
    const double r = std::clamp(det(b) / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e0 = q + 2.0 * p * std::cos(phi);
    const double e2 =
        q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    return {e0, 3.0 * q - e0 - e2, e2};
}

Mat3 adjugate(const Mat3& a) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            const int r0 = (k + 1) % 3, r1 = (k + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            c[i][k] = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
        }
    return c;
}

// Solves m x = r for a symmetric positive definite m whose conditioning the
// caller has already vetted.
Vec3 solve_spd(const Mat3& m, const Vec3& r) {
    const Mat3 adj = adjugate(m);
    const double d = det(m);
    return (1.0 / d) * (adj * r);
}

} // namespace

std::optional<AmbientIsometry> detect(
    const Surface& f, const DomainIsometry& g,
    const std::vector<SplitComplex>& samples) {
    if (std::abs(modulus_sq(g.a) - 1.0) > 1e-9)
        fail(ErrorCode::Validation,
             "domain factor must satisfy |a|^2 = 1 to act isometrically");
    if (samples.size() < 6)
        fail(ErrorCode::Validation,
             "need at least 6 samples to determine a symmetry");

    // Row i of O solves the least-squares system built from
    //   omega(g(z)) a = O omega(z)         (preserving)
    //   omega(g(z)) a = O conj(omega(z))   (conjugating)
    // split into real and imaginary parts.  Flipping the sign of the
    // imaginary basis vector absorbs the conjugation, and the Gram matrix
    // is the same either way.
    const double ysign = g.conjugating ? -1.0 : 1.0;
    Mat3 gram{};
    Mat3 rhs{};
    for (SplitComplex z : samples) {
        const Vec3c w = surface_omega(f, z);
        const Vec3c wg = g.a * surface_omega(f, apply(g, z));
        const Vec3 x = real_part(w);
        const Vec3 y = ysign * imag_part(w);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) {
                gram[i][k] += x[i] * x[k] + y[i] * y[k];
                rhs[i][k] += wg[i].re * x[k] + wg[i].im * y[k];
            }
    }

    const auto eig = symmetric_eigenvalues(gram);
    const double emax = std::max({std::abs(eig[0]), std::abs(eig[1]),
                                  std::abs(eig[2])});
    const double emin = std::min({std::abs(eig[0]), std::abs(eig[1]),
                                  std::abs(eig[2])});
    if (emax <= 0.0 || emin / emax < 1e-10)
        fail(ErrorCode::IllConditioned,
             "derivative samples span too few directions to determine the "
             "linear part");

    Mat3 o{};
    for (int i = 0; i < 3; ++i) {
        const Vec3 row = solve_spd(gram, {rhs[i][0], rhs[i][1], rhs[i][2]});
        o[i] = {row[0], row[1], row[2]};
    }
    if (!is_lorentz(o, 10.0 * tol::symmetry()))
        return std::nullopt;

    std::vector<Vec3> cloud;
    cloud.reserve(2 * samples.size());
    Vec3 sum{};
    std::vector<Vec3> p(samples.size()), q(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        p[k] = surface_point(f, samples[k]);
        q[k] = surface_point(f, apply(g, samples[k]));
        sum = sum + (q[k] - o * p[k]);
        cloud.push_back(p[k]);
        cloud.push_back(q[k]);
    }
    const Vec3 t = (1.0 / static_cast<double>(samples.size())) * sum;
    double res = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k)
        res = std::max(res, euclidean_norm(q[k] - o * p[k] - t));
    const double threshold =
        tol::symmetry() * std::max(1.0, bbox_diagonal(cloud));
    if (res > threshold)
        return std::nullopt;

    AmbientIsometry out;
    out.linear = o;
    out.translation = t;
    out.residual = res;
    out.orientation_reversing = det(o) < 0.0;
    out.translation_vanishes = euclidean_norm(t) <= threshold;
    return out;
}

double pullback_residual(const Surface& f, const DomainIsometry& g,
                         const Mat3& linear, const Vec3& translation,
                         const std::vector<SplitComplex>& samples) {
    double res = 0.0;
    for (SplitComplex z : samples) {
        const Vec3 p = surface_point(f, z);
        const Vec3 q = surface_point(f, apply(g, z));
        res = std::max(res,
                       euclidean_norm(q - linear * p - translation));
    }
    return res;
}

std::optional<Mat3> propagate_linear(const Mat3c& a, const Mat3& linear,
                                     bool conjugating) {
    const Mat3c right = conjugating ? pc_conj(a) : a;
    const Mat3c prod = (a * complexify(linear)) * inverse_c(right);
    const double scale = std::max(1.0, max_abs(prod));
    if (max_abs(imag_part(prod)) > tol::realness() * scale)
        return std::nullopt;
    const Mat3 o = real_part(prod);
    if (!is_lorentz(o, 1e-9 * scale * scale))
        return std::nullopt;
    return o;
}

Vec3c period_lift(const WeierstrassData& d, SplitComplex shift) {
    return integral_lift(d, d.base_point + shift);
}

std::vector<FamilyEntry> family_report(
    const WeierstrassData& d, const DomainIsometry& g, FamilyKind kind,
    const std::vector<double>& thetas,
    const std::vector<SplitComplex>& samples) {
    std::vector<FamilyEntry> out(thetas.size());
    std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0;
         i < static_cast<std::ptrdiff_t>(thetas.size()); ++i) {
        try {
            const double theta = thetas[i];
            const Mat3c frame = kind == FamilyKind::Associated
                                    ? associated_matrix(theta)
                                    : anti_isometric_matrix(theta);
            FamilyEntry e{theta, false, {}, 0.0};
            if (auto amb = detect(Surface{d, frame, false}, g, samples)) {
                e.survives = true;
                e.linear = amb->linear;
                e.residual = amb->residual;
            }
            out[i] = e;
        } catch (...) {
#pragma omp critical
            if (!first_error)
                first_error = std::current_exception();
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);
    return out;
}

namespace {

SpaceGroupElement fit_element(QuadrupleSurface which, const Surface& s,
                              const DomainIsometry& g, const Mat3& linear,
                              const std::vector<SplitComplex>& samples) {
    std::vector<Vec3> cloud;
    cloud.reserve(2 * samples.size());
    Vec3 sum{};
    std::vector<Vec3> p(samples.size()), q(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        p[k] = surface_point(s, samples[k]);
        q[k] = surface_point(s, apply(g, samples[k]));
        sum = sum + (q[k] - linear * p[k]);
        cloud.push_back(p[k]);
        cloud.push_back(q[k]);
    }
    const Vec3 t = (1.0 / static_cast<double>(samples.size())) * sum;
    double res = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k)
        res = std::max(res, euclidean_norm(q[k] - linear * p[k] - t));
    if (res > tol::symmetry() * std::max(1.0, bbox_diagonal(cloud)))
        fail(ErrorCode::NotALineSymmetry,
             "prescribed linear part fails on a transformed surface");
    return {which, linear, t, res};
}

} // namespace

std::array<SpaceGroupElement, 4> quadruple(
    const WeierstrassData& d, const DomainIsometry& g,
    const std::vector<SplitComplex>& samples) {
    if (!g.conjugating)
        fail(ErrorCode::NotALineSymmetry,
             "line symmetries come from conjugating domain maps only");
    const auto amb = detect(Surface{d}, g, samples);
    if (!amb)
        fail(ErrorCode::NotALineSymmetry,
             "domain map induces no ambient isometry");
    const Mat3 o = amb->linear;
    if (std::abs(det(o) - 1.0) > tol::symmetry() ||
        std::abs(trace(o) + 1.0) > tol::symmetry())
        fail(ErrorCode::NotALineSymmetry,
             "ambient part is not a half-turn");

    // The +1-eigenvector spans the kernel of O - I, so every nonzero
    // column of adj(O - I) is a multiple of it; for a half-turn the other
    // two eigenvalues are -2 each, making the best column norm about 4.
    const Mat3 adj = adjugate(o - kIdentity);
    Vec3 axis{};
    double best = 0.0;
    for (int k = 0; k < 3; ++k) {
        const Vec3 col{adj[0][k], adj[1][k], adj[2][k]};
        const double n = euclidean_norm(col);
        if (n > best) {
            best = n;
            axis = col;
        }
    }
    if (best <= tol::symmetry())
        fail(ErrorCode::NotALineSymmetry, "fixed axis is undetermined");
    if (minkowski(axis, axis) >= 0.0)
        fail(ErrorCode::NotALineSymmetry, "fixed axis is not timelike");

    return {fit_element(QuadrupleSurface::Base,
                        Surface{d}, g, o, samples),
            fit_element(QuadrupleSurface::Conjugate,
                        Surface{d, conjugation_matrix(), false}, g, -o,
                        samples),
            fit_element(QuadrupleSurface::Dual,
                        Surface{d, duality_matrix(), false}, g,
                        -kIdentity, samples),
            fit_element(QuadrupleSurface::ConjugateDual,
                        Surface{d, conj_duality_matrix(), false}, g,
                        kIdentity, samples)};
}

} // namespace lwz
