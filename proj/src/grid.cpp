#include "lwz/grid.hpp"

#include <cstddef>
#include <exception>
#include <string>

#include "lwz/quadrature.hpp"

namespace lwz {
namespace {

void validate(const GridSpec& g) {
    if (g.nx < 2 || g.ny < 2)
        fail(ErrorCode::Validation,
             "grids need at least 2 samples per axis");
}

[[noreturn]] void rethrow_at(int ix, int iy, const Error& e) {
    fail(e.code(), "grid point (" + std::to_string(ix) + ", " +
                       std::to_string(iy) + "): " + e.what());
}

Vec3 edge_step(const Surface& s, SplitComplex z0, SplitComplex z1) {
    const Vec3c lift = integrate_form(
        [&s](SplitComplex z) { return surface_omega(s, z); }, {{z0, z1}});
    return real_part(lift);
}

// Row 0 is shared by the serial and parallel kernels; both march the
// columns from it with exactly the same arithmetic.
std::vector<Vec3> first_row(const Surface& s, const GridSpec& g) {
    std::vector<Vec3> out(static_cast<std::size_t>(g.nx) * g.ny);
    for (int ix = 0; ix < g.nx; ++ix) {
        try {
            out[ix] = ix == 0
                          ? surface_point(s, grid_point(g, 0, 0))
                          : out[ix - 1] + edge_step(s,
                                                    grid_point(g, ix - 1, 0),
                                                    grid_point(g, ix, 0));
        } catch (const Error& e) {
            rethrow_at(ix, 0, e);
        }
    }
    return out;
}

void march_column(const Surface& s, const GridSpec& g, int ix,
                  std::vector<Vec3>& out) {
    for (int iy = 1; iy < g.ny; ++iy) {
        try {
            out[static_cast<std::size_t>(iy) * g.nx + ix] =
                out[static_cast<std::size_t>(iy - 1) * g.nx + ix] +
                edge_step(s, grid_point(g, ix, iy - 1),
                          grid_point(g, ix, iy));
        } catch (const Error& e) {
            rethrow_at(ix, iy, e);
        }
    }
}

} // namespace

std::vector<Vec3> sweep_positions_serial(const Surface& s,
                                         const GridSpec& g) {
    validate(g);
    std::vector<Vec3> out = first_row(s, g);
    for (int ix = 0; ix < g.nx; ++ix)
        march_column(s, g, ix, out);
    return out;
}

std::vector<Vec3> sweep_positions(const Surface& s, const GridSpec& g) {
    validate(g);
    std::vector<Vec3> out = first_row(s, g);
    std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic)
    for (int ix = 0; ix < g.nx; ++ix) {
        try {
            march_column(s, g, ix, out);
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

std::vector<SurfaceJet> sweep_curvature_serial(const WeierstrassData& d,
                                               const GridSpec& g) {
    validate(g);
    std::vector<SurfaceJet> out(static_cast<std::size_t>(g.nx) * g.ny);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            try {
                out[static_cast<std::size_t>(iy) * g.nx + ix] =
                    curvature_jet(d, grid_point(g, ix, iy));
            } catch (const Error& e) {
                rethrow_at(ix, iy, e);
            }
        }
    return out;
}

std::vector<SurfaceJet> sweep_curvature(const WeierstrassData& d,
                                        const GridSpec& g) {
    validate(g);
    const std::ptrdiff_t n =
        static_cast<std::ptrdiff_t>(g.nx) * g.ny;
    std::vector<SurfaceJet> out(static_cast<std::size_t>(n));
    std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        const int ix = static_cast<int>(k % g.nx);
        const int iy = static_cast<int>(k / g.nx);
        try {
            try {
                out[k] = curvature_jet(d, grid_point(g, ix, iy));
            } catch (const Error& e) {
                rethrow_at(ix, iy, e);
            }
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

} // namespace lwz
