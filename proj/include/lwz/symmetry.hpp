#pragma once

// Detection of ambient isometries induced by affine (anti)paraholomorphic
// self-maps of the parameter domain, and their propagation through Goursat
// transformations.

#include <array>
#include <optional>
#include <vector>

#include "lwz/weierstrass.hpp"

namespace lwz {

/// z -> a z + b, or z -> a conj(z) + b when conjugating.  Isometry of the
/// Lorentzian parameter plane requires |a|^2 = +-1.
struct DomainIsometry {
    SplitComplex a{1.0};
    SplitComplex b{};
    bool conjugating = false;
};

inline SplitComplex apply(const DomainIsometry& g, SplitComplex z) {
    return g.a * (g.conjugating ? pc_conj(z) : z) + g.b;
}

/// Whether g reverses the orientation of the parameter plane: conjugation
/// does, and so does a factor with negative modulus, but not both at once.
inline bool orientation_reversing(const DomainIsometry& g) {
    return g.conjugating != (modulus_sq(g.a) < 0.0);
}

struct AmbientIsometry {
    Mat3 linear{};
    Vec3 translation{};
    double residual = 0.0; // max position misfit over the samples
    bool orientation_reversing = false;
    bool translation_vanishes = false;
};

/// Least-squares fit of O and t with f(g(z)) = O f(z) + t over the sample
/// points, driven by the derivative identity omega(g(z)) a = O omega(z)
/// (conjugated omega on the right when g conjugates).  Returns nullopt when
/// the fitted pair fails the residual test.  Throws Validation for |a|^2
/// != 1 or fewer than 6 samples, IllConditioned when the omega samples do
/// not span enough directions to determine O.
std::optional<AmbientIsometry> detect(const Surface& f,
                                      const DomainIsometry& g,
                                      const std::vector<SplitComplex>& samples);

/// Max over samples of |f(g(z)) - O f(z) - t|.
double pullback_residual(const Surface& f, const DomainIsometry& g,
                         const Mat3& linear, const Vec3& translation,
                         const std::vector<SplitComplex>& samples);

/// Linear part of the image symmetry of f_A: A O A^{-1}, with conj(A) in
/// place of the right-hand A when the domain map conjugates.  Returns
/// nullopt when the product is not a real Lorentz matrix, which is exactly
/// when the symmetry does not survive the transformation.
std::optional<Mat3> propagate_linear(const Mat3c& a, const Mat3& linear,
                                     bool conjugating);

/// Paracomplex lift of the period vector of z -> z + shift: the integral
/// of omega over one shift, whose image translation under A is
/// Re(A period).
Vec3c period_lift(const WeierstrassData& d, SplitComplex shift);

enum class FamilyKind { Associated, AntiIsometric };

struct FamilyEntry {
    double theta;
    bool survives;
    Mat3 linear{};
    double residual = 0.0;
};

/// Runs detect for g across family members (h, s(theta) eta); the theta
/// sweep parallelizes.
std::vector<FamilyEntry> family_report(const WeierstrassData& d,
                                       const DomainIsometry& g,
                                       FamilyKind kind,
                                       const std::vector<double>& thetas,
                                       const std::vector<SplitComplex>&
                                           samples);

// ---------------------------------------------------------------------------
// Timelike-line symmetry quadruple
// ---------------------------------------------------------------------------

enum class QuadrupleSurface { Base, Conjugate, Dual, ConjugateDual };

struct SpaceGroupElement {
    QuadrupleSurface surface;
    Mat3 linear{};
    Vec3 translation{};
    double residual = 0.0;
};

/// For a conjugating g whose detected linear part is a half-turn about a
/// timelike line (det = 1, trace = -1, fixed axis timelike), returns the
/// four induced symmetries: (f, O), (f_J, -O), (f_D, -I), (f_JD, +I), each
/// re-verified by its position residual.  Throws NotALineSymmetry when any
/// precondition or verification fails.
std::array<SpaceGroupElement, 4> quadruple(
    const WeierstrassData& d, const DomainIsometry& g,
    const std::vector<SplitComplex>& samples);

} // namespace lwz
