#pragma once

// Split-complex (paracomplex) arithmetic and second-order jets.
//
// Numbers are z = x + j y with j^2 = +1.  The squared modulus
// |z|^2 = z * conj(z) = x^2 - y^2 is an indefinite quadratic form: it can be
// negative, and it vanishes on the light cone x = +-y, whose nonzero points
// are zero divisors.  Division is defined only away from that cone.

#include <cmath>
#include <functional>

#include "lwz/errors.hpp"
#include "lwz/tolerances.hpp"

namespace lwz {

struct SplitComplex {
    double re = 0.0;
    double im = 0.0;

    constexpr SplitComplex() = default;
    constexpr SplitComplex(double r) : re(r) {}
    constexpr SplitComplex(double r, double i) : re(r), im(i) {}

    friend constexpr SplitComplex operator+(SplitComplex a, SplitComplex b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend constexpr SplitComplex operator-(SplitComplex a, SplitComplex b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend constexpr SplitComplex operator-(SplitComplex a) {
        return {-a.re, -a.im};
    }
    // (a + jb)(c + jd) = (ac + bd) + j(ad + bc)
    friend constexpr SplitComplex operator*(SplitComplex a, SplitComplex b) {
        return {a.re * b.re + a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr SplitComplex operator*(double s, SplitComplex a) {
        return {s * a.re, s * a.im};
    }
    friend constexpr SplitComplex operator*(SplitComplex a, double s) {
        return {a.re * s, a.im * s};
    }
    friend constexpr bool operator==(SplitComplex a, SplitComplex b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline constexpr SplitComplex kJ{0.0, 1.0};

constexpr SplitComplex pc_conj(SplitComplex z) { return {z.re, -z.im}; }

/// |z|^2 = z * conj(z) = re^2 - im^2.  Multiplicative: |zw|^2 = |z|^2 |w|^2.
constexpr double modulus_sq(SplitComplex z) {
    return z.re * z.re - z.im * z.im;
}

/// Euclidean magnitude of the component pair; used for scale estimates only.
inline double component_norm(SplitComplex z) {
    return std::hypot(z.re, z.im);
}

inline bool is_zero_divisor(SplitComplex z) {
    const double scale = std::max(1.0, z.re * z.re + z.im * z.im);
    return std::abs(modulus_sq(z)) <= tol::zero_divisor() * scale;
}

/// z / w = z * conj(w) / |w|^2.  Throws ZeroDivisor when w is lightlike,
/// i.e. |w|^2 vanishes against the scale of w.
inline SplitComplex pc_div(SplitComplex z, SplitComplex w) {
    if (is_zero_divisor(w))
        fail(ErrorCode::ZeroDivisor,
             "division by lightlike split-complex number");
    const double m = modulus_sq(w);
    const SplitComplex n = z * pc_conj(w);
    return {n.re / m, n.im / m};
}

// ===========================================================================
// Null (idempotent) coordinates
// ===========================================================================
//
// With e = (1+j)/2 and ebar = (1-j)/2, every z = x + jy decomposes as
// z = u e + v ebar where u = x + y and v = x - y.  Multiplication becomes
// componentwise in (u, v), which is why paraholomorphic maps split into a
// function of u plus a function of v.

struct NullPair {
    double u = 0.0;
    double v = 0.0;
};

constexpr NullPair null_split(SplitComplex z) {
    return {z.re + z.im, z.re - z.im};
}

constexpr SplitComplex recompose(NullPair p) {
    return {0.5 * (p.u + p.v), 0.5 * (p.u - p.v)};
}

// ===========================================================================
// Second-order jets
// ===========================================================================

/// Value, first and second derivative with respect to z, propagated
/// forward through arithmetic and the elementary paracomplex functions.
struct Jet2 {
    SplitComplex f;
    SplitComplex df;
    SplitComplex d2f;

    static constexpr Jet2 variable(SplitComplex z) {
        return {z, SplitComplex{1.0}, SplitComplex{}};
    }
    static constexpr Jet2 constant(SplitComplex c) {
        return {c, SplitComplex{}, SplitComplex{}};
    }

    friend constexpr Jet2 operator+(const Jet2& a, const Jet2& b) {
        return {a.f + b.f, a.df + b.df, a.d2f + b.d2f};
    }
    friend constexpr Jet2 operator-(const Jet2& a, const Jet2& b) {
        return {a.f - b.f, a.df - b.df, a.d2f - b.d2f};
    }
    friend constexpr Jet2 operator-(const Jet2& a) {
        return {-a.f, -a.df, -a.d2f};
    }
    friend constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
        return {a.f * b.f,
                a.df * b.f + a.f * b.df,
                a.d2f * b.f + 2.0 * (a.df * b.df) + a.f * b.d2f};
    }
    /// Quotient jet: from q = a/b, q' = (a' - q b')/b, q'' = (a'' - 2q'b' - q b'')/b.
    friend Jet2 operator/(const Jet2& a, const Jet2& b) {
        const SplitComplex q0 = pc_div(a.f, b.f);
        const SplitComplex q1 = pc_div(a.df - q0 * b.df, b.f);
        const SplitComplex q2 =
            pc_div(a.d2f - 2.0 * (q1 * b.df) - q0 * b.d2f, b.f);
        return {q0, q1, q2};
    }
};

/// Jet of an elementary function with value/derivative/second derivative
/// (v0, v1, v2) at g.f, composed with the inner jet g by the chain rule.
constexpr Jet2 jet_compose(SplitComplex v0, SplitComplex v1, SplitComplex v2,
                           const Jet2& g) {
    return {v0, v1 * g.df, v2 * (g.df * g.df) + v1 * g.d2f};
}

// ---------------------------------------------------------------------------
// Elementary paracomplex functions, returned as jets seeded with dz = 1.
// ---------------------------------------------------------------------------

/// pexp(x + jy) = e^x (cosh y + j sinh y); equals its own derivative.
/// Throws Overflow once e^(x + |y|) leaves the double range (the caller
/// must rescale its data).
inline Jet2 pexp(SplitComplex z) {
    if (z.re + std::abs(z.im) > 700.0)
        fail(ErrorCode::Overflow, "pexp argument exceeds floating range");
    const double ex = std::exp(z.re);
    const SplitComplex v{ex * std::cosh(z.im), ex * std::sinh(z.im)};
    return {v, v, v};
}

/// pcos(x + jy) = cos x cos y - j sin x sin y.  d/dz pcos = -psin.
inline SplitComplex pcos_value(SplitComplex z) {
    return {std::cos(z.re) * std::cos(z.im), -std::sin(z.re) * std::sin(z.im)};
}

/// psin(x + jy) = sin x cos y + j cos x sin y.  d/dz psin = pcos.
inline SplitComplex psin_value(SplitComplex z) {
    return {std::sin(z.re) * std::cos(z.im), std::cos(z.re) * std::sin(z.im)};
}

inline Jet2 pcos(SplitComplex z) {
    const SplitComplex c = pcos_value(z), s = psin_value(z);
    return {c, -s, -c};
}

inline Jet2 psin(SplitComplex z) {
    const SplitComplex c = pcos_value(z), s = psin_value(z);
    return {s, c, -s};
}

/// ptan = psin / pcos; parameromorphic, undefined where pcos is lightlike.
inline Jet2 ptan(SplitComplex z) { return psin(z) / pcos(z); }

enum class CircKind { Pcos, Psin, Ptan };

inline Jet2 pcirc(CircKind kind, SplitComplex z) {
    switch (kind) {
    case CircKind::Pcos: return pcos(z);
    case CircKind::Psin: return psin(z);
    default:             return ptan(z);
    }
}

// ===========================================================================
// Paraholomorphy residual
// ===========================================================================

/// Central-difference estimate of || (d/dx - j d/dy) f / 2 || at z, with one
/// Richardson pass (steps h and h/10).  Vanishes, up to O(h^4), exactly on
/// paraholomorphic maps; conj(z) gives residual 1.
inline double wirtinger_residual(
    const std::function<SplitComplex(SplitComplex)>& f, SplitComplex z,
    double step = tol::wirtinger_step()) {
    auto dbar = [&](double h) {
        const SplitComplex fx =
            (1.0 / (2.0 * h)) *
            (f({z.re + h, z.im}) - f({z.re - h, z.im}));
        const SplitComplex fy =
            (1.0 / (2.0 * h)) *
            (f({z.re, z.im + h}) - f({z.re, z.im - h}));
        return 0.5 * (fx - kJ * fy);
    };
    const SplitComplex coarse = dbar(step);
    const SplitComplex fine = dbar(step / 10.0);
    const SplitComplex r = (1.0 / 99.0) * (100.0 * fine - coarse);
    return component_norm(r);
}

} // namespace lwz
