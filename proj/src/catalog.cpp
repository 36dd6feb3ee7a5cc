#include "lwz/catalog.hpp"

#include <cmath>
#include <numbers>

#include "lwz/goursat.hpp"

namespace lwz {
namespace {

using expr::NodePtr;

NodePtr P(const char* s) { return expr::parse(s); }

NodePtr pexp_z() { return expr::call(expr::Func::Pexp, expr::variable()); }
NodePtr pexp_half_z() {
    return expr::call(expr::Func::Pexp,
                      expr::div(expr::variable(), expr::literal({2.0})));
}

/// a * e + b as an expression tree.
NodePtr affine(SplitComplex a, NodePtr e, SplitComplex b) {
    return expr::add(expr::mul(expr::literal(a), std::move(e)),
                     expr::literal(b));
}

DomainIsometry conj_map(double a_re, double a_im = 0.0) {
    return {SplitComplex{a_re, a_im}, SplitComplex{}, true};
}
DomainIsometry point_map(double a_re, double a_im = 0.0) {
    return {SplitComplex{a_re, a_im}, SplitComplex{}, false};
}
DomainIsometry shift_map(SplitComplex b) {
    return {SplitComplex{1.0}, b, false};
}

constexpr Mat3 diag(double a, double b, double c) {
    return {{{a, 0, 0}, {0, b, 0}, {0, 0, c}}};
}

CatalogEntry make_enneper() {
    CatalogEntry e;
    e.name = "enneper";
    e.summary = "cubic polynomial surface from data (z, dz); singular "
                "along the hyperbola x^2 - y^2 = 1";
    e.data = make_data(P("z"), P("1"));
    e.domain = {-1.0, 1.0, -1.0, 1.0};
    e.patch_domain = {-1.0, 1.0, -1.0, 1.0};
    e.patch = from_null_curves(
        [](double u) -> CurveJet {
            return {{-0.5 * u - u * u * u / 6.0,
                     0.5 * u - u * u * u / 6.0, 0.5 * u * u},
                    {-0.5 * (1.0 + u * u), 0.5 * (1.0 - u * u), u},
                    {-u, -u, 1.0}};
        },
        [](double v) -> CurveJet {
            return {{-0.5 * v - v * v * v / 6.0,
                     -0.5 * v + v * v * v / 6.0, 0.5 * v * v},
                    {-0.5 * (1.0 + v * v), -0.5 * (1.0 - v * v), v},
                    {-v, v, 1.0}};
        },
        e.patch_domain);
    e.symmetries = {{conj_map(1.0), diag(1, -1, 1)},
                    {conj_map(-1.0), diag(-1, 1, 1)},
                    {point_map(-1.0), diag(-1, -1, 1)}};
    e.closed_form = [](double x, double y) -> Vec3 {
        return {-x - x * x * x / 3.0 - x * y * y,
                y - x * x * y - y * y * y / 3.0, x * x + y * y};
    };
    return e;
}

CatalogEntry make_parabolic_helicoid() {
    CatalogEntry e;
    e.name = "parabolic-helicoid";
    e.summary = "polynomial surface folding along its singular line y = 0; "
                "conjugate of the parabolic catenoid";
    e.data = make_data_products(P("((1+j)*z + (1-j)/z)/2"),
                                P("((1+j) + (1-j)*z^2)/2"), P("z"),
                                P("((1+j)*z^2 + (1-j))/2"));
    e.domain = {0.4, 1.2, -0.3, 0.3};
    e.symmetries = {{conj_map(1.0), kIdentity},
                    {conj_map(-1.0), diag(-1, -1, 1)},
                    {point_map(-1.0), diag(-1, -1, 1)}};
    e.closed_form = [](double x, double y) -> Vec3 {
        return {-x - x * x * x / 3.0 - x * y * y,
                x - x * x * x / 3.0 - x * y * y, x * x + y * y};
    };
    return e;
}

CatalogEntry make_parabolic_catenoid() {
    CatalogEntry e;
    e.name = "parabolic-catenoid";
    e.summary = "polynomial surface whose singular line y = 0 collapses to "
                "a cone point at the origin";
    e.data = make_data_products(P("((1+j)*z + (1-j)/z)/2"),
                                P("((1+j) - (1-j)*z^2)/2"), P("j*z"),
                                P("((1+j)*z^2 - (1-j))/2"));
    e.domain = {0.4, 1.2, -0.3, 0.3};
    e.symmetries = {{conj_map(1.0), -kIdentity},
                    {conj_map(-1.0), diag(1, 1, -1)},
                    {point_map(-1.0), diag(-1, -1, 1)}};
    e.closed_form = [](double x, double y) -> Vec3 {
        return {-y - x * x * y - y * y * y / 3.0,
                y - x * x * y - y * y * y / 3.0, 2.0 * x * y};
    };
    return e;
}

CatalogEntry make_elliptic_catenoid() {
    const double pi = std::numbers::pi;
    CatalogEntry e;
    e.name = "elliptic-catenoid";
    e.summary = "surface of revolution type, periodic in y with period pi; "
                "the lines cos 2x = 0 collapse to cone points";
    e.data = make_data_products(P("ptan(z)"), P("pcos(z)^2/2"),
                                P("psin(z)*pcos(z)/2"), P("psin(z)^2/2"),
                                SplitComplex{}, Vec3{0.0, 0.0, -0.25});
    e.domain = {-1.0, 1.0, -1.0, 1.0};
    e.symmetries = {{point_map(-1.0), diag(-1, -1, 1)},
                    {conj_map(1.0), diag(1, -1, 1)},
                    {conj_map(-1.0), diag(-1, 1, 1)},
                    {shift_map({pi, 0.0}), kIdentity, true,
                     {-0.5 * pi, 0.0, 0.0}},
                    {shift_map({0.0, pi}), kIdentity}};
    e.closed_form = [](double x, double y) -> Vec3 {
        return {-0.5 * x, 0.25 * std::cos(2 * x) * std::sin(2 * y),
                -0.25 * std::cos(2 * x) * std::cos(2 * y)};
    };
    return e;
}

CatalogEntry make_bonnet(double lambda) {
    const double pi = std::numbers::pi;
    CatalogEntry e = make_elliptic_catenoid();
    e.name = "bonnet";
    e.summary = "isometric deformation of the elliptic catenoid; both "
                "coordinate periods turn into ambient translations";
    e.data = lopez_ros_data(e.data, lambda);
    e.parameter = lambda;
    const double a = lambda + 1.0 / lambda;
    const double b = 1.0 / lambda - lambda;
    e.symmetries = {{point_map(-1.0), diag(-1, -1, 1)},
                    {conj_map(1.0), diag(1, -1, 1)},
                    {conj_map(-1.0), diag(-1, 1, 1)},
                    {shift_map({pi, 0.0}), kIdentity, true,
                     {-0.25 * pi * a, 0.0, 0.0}},
                    {shift_map({0.0, pi}), kIdentity, lambda != 1.0,
                     {0.0, 0.25 * pi * b, 0.0}}};
    e.closed_form = [a, b](double x, double y) -> Vec3 {
        const double c2x = std::cos(2 * x), s2x = std::sin(2 * x);
        const double c2y = std::cos(2 * y), s2y = std::sin(2 * y);
        return {-0.25 * a * x - 0.125 * b * s2x * c2y,
                0.25 * b * y + 0.125 * a * c2x * s2y, -0.25 * c2x * c2y};
    };
    return e;
}

CatalogEntry make_flat_plane() {
    const double s3 = std::sqrt(3.0);
    const double c1 = (2.0 + s3) / 4.0, c2 = (2.0 - s3) / 4.0;
    CatalogEntry e;
    e.name = "flat-plane";
    e.summary = "totally umbilic plane written on exponential data; the "
                "second fundamental form vanishes identically";
    e.data = make_data_products(
        nullptr, affine({c1, c1}, pexp_z(), {-0.5, 0.5}),
        affine({0.25, 0.25}, pexp_z(), {0.5, -0.5}),
        affine({c2, c2}, pexp_z(), {-0.5, 0.5}), SplitComplex{},
        Vec3{-1.0, 0.5 * s3, 0.5});
    e.domain = {-1.0, 1.0, -1.0, 1.0};
    e.patch_domain = {-1.0, 1.0, -1.0, 1.0};
    e.patch = from_null_curves(
        [s3](double u) -> CurveJet {
            const Vec3 p{-std::exp(u), 0.5 * s3 * std::exp(u),
                         0.5 * std::exp(u)};
            return {p, p, p};
        },
        [](double v) -> CurveJet {
            return {{v, 0.0, v}, {1.0, 0.0, 1.0}, {}};
        },
        e.patch_domain);
    e.symmetries = {{shift_map({1.0, -1.0}), kIdentity, true,
                     {2.0, 0.0, 2.0}}};
    e.closed_form = [s3](double x, double y) -> Vec3 {
        const double eu = std::exp(x + y), v = x - y;
        return {-eu + v, 0.5 * s3 * eu, 0.5 * eu + v};
    };
    return e;
}

CatalogEntry make_flat_bscroll() {
    const double s3 = std::sqrt(3.0);
    CatalogEntry e;
    e.name = "flat-bscroll";
    e.summary = "flat scroll over a lightlike line: K = 0 with a "
                "nowhere-vanishing Hopf coefficient, so no umbilic points";
    const SplitComplex c34{0.375, 0.375}; // (3/4)(1+j)/2
    const SplitComplex cs3{0.5 * s3, 0.5 * s3};
    e.data = make_data_products(
        nullptr,
        expr::add(expr::add(expr::mul(expr::literal(c34), pexp_z()),
                            expr::mul(expr::literal(cs3), pexp_half_z())),
                  expr::literal({0.0, 1.0})),
        affine(c34, pexp_z(), {0.0, -1.0}),
        expr::add(expr::sub(expr::mul(expr::literal(c34), pexp_z()),
                            expr::mul(expr::literal(cs3), pexp_half_z())),
                  expr::literal({0.0, 1.0})),
        SplitComplex{}, Vec3{-0.75, 2.0 * s3, 0.75});
    e.domain = {-1.0, 1.0, -1.0, 1.0};
    e.patch_domain = {-1.0, 1.0, -1.0, 1.0};
    e.patch = from_null_curves(
        [s3](double u) -> CurveJet {
            const double eu = std::exp(u), eh = std::exp(0.5 * u);
            return {{-u - 0.75 * eu, 2.0 * s3 * eh, -u + 0.75 * eu},
                    {-1.0 - 0.75 * eu, s3 * eh, -1.0 + 0.75 * eu},
                    {-0.75 * eu, 0.5 * s3 * eh, 0.75 * eu}};
        },
        [](double v) -> CurveJet {
            return {{v, 0.0, v}, {1.0, 0.0, 1.0}, {}};
        },
        e.patch_domain);
    e.symmetries = {{shift_map({1.0, -1.0}), kIdentity, true,
                     {2.0, 0.0, 2.0}}};
    e.closed_form = [s3](double x, double y) -> Vec3 {
        const double u = x + y, v = x - y;
        const double eu = std::exp(u), eh = std::exp(0.5 * u);
        return {-u - 0.75 * eu + v, 2.0 * s3 * eh, -u + 0.75 * eu + v};
    };
    return e;
}

} // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{
        "enneper",          "parabolic-helicoid", "parabolic-catenoid",
        "elliptic-catenoid", "bonnet",            "flat-plane",
        "flat-bscroll"};
    return names;
}

CatalogEntry catalog_entry(const std::string& name, double lambda) {
    if (name == "enneper")
        return make_enneper();
    if (name == "parabolic-helicoid")
        return make_parabolic_helicoid();
    if (name == "parabolic-catenoid")
        return make_parabolic_catenoid();
    if (name == "elliptic-catenoid")
        return make_elliptic_catenoid();
    if (name == "bonnet")
        return make_bonnet(lambda);
    if (name == "flat-plane")
        return make_flat_plane();
    if (name == "flat-bscroll")
        return make_flat_bscroll();
    fail(ErrorCode::Validation, "unknown catalog entry '" + name + "'");
}

} // namespace lwz
