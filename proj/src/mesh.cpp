#include "lwz/mesh.hpp"

#include <cmath>
#include <cstdio>

#include "lwz/tolerances.hpp"

namespace lwz {
namespace {

void append_num(std::string& out, double v) {
    if (std::isnan(v)) {
        out += "nan";
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void append_vertex(std::string& out, const Vec3& p, bool euclidean_view) {
    const Vec3 q = euclidean_view ? Vec3{p[1], p[2], p[0]} : p;
    out += "v ";
    append_num(out, q[0]);
    out += ' ';
    append_num(out, q[1]);
    out += ' ';
    append_num(out, q[2]);
    out += '\n';
}

// Chart-free singularity test: the metric degenerates exactly where
// <omega, conj omega> is (relatively) zero.  Works at poles of the h-chart,
// where the surface itself may be perfectly regular.
bool vertex_singular(const Surface& s, SplitComplex z) {
    const Vec3c w = surface_omega(s, z);
    const double lambda = 0.5 * minkowski_c(w, pc_conj(w)).re;
    const double scale = component_norm(w);
    return std::abs(lambda) <=
           tol::zero_divisor() * std::max(1.0, scale * scale);
}

} // namespace

std::string write_obj(const Surface& s, const GridSpec& g,
                      const MeshOptions& opt) {
    const std::vector<Vec3> pos = sweep_positions(s, g);
    const std::size_t n = pos.size();

    std::vector<char> singular(n, 0);
    if (opt.skip_singular)
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix) {
                const std::size_t k =
                    static_cast<std::size_t>(iy) * g.nx + ix;
                singular[k] = vertex_singular(s, grid_point(g, ix, iy));
            }

    // Group singular vertices whose images coincide; a group of two or
    // more is a shrinking (conelike) singularity and gets one vertex.
    const double eps =
        tol::image_collapse() * std::max(1.0, bbox_diagonal(pos));
    std::vector<int> cluster(n, -1);
    std::vector<Vec3> rep;  // first member's position
    std::vector<Vec3> sum;
    std::vector<int> count;
    for (std::size_t k = 0; k < n; ++k) {
        if (!singular[k])
            continue;
        int c = -1;
        for (std::size_t i = 0; i < rep.size(); ++i)
            if (euclidean_norm(pos[k] - rep[i]) <= eps) {
                c = static_cast<int>(i);
                break;
            }
        if (c < 0) {
            c = static_cast<int>(rep.size());
            rep.push_back(pos[k]);
            sum.push_back({});
            count.push_back(0);
        }
        cluster[k] = c;
        sum[c] = sum[c] + pos[k];
        ++count[c];
    }

    std::string out;
    out.reserve(64 * n);
    std::vector<int> remap(n, 0);
    std::vector<char> cone_done(rep.size(), 0);
    int next = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (!singular[k]) {
            remap[k] = ++next;
            append_vertex(out, pos[k], opt.euclidean_view);
        } else if (count[cluster[k]] >= 2 && !cone_done[cluster[k]]) {
            cone_done[cluster[k]] = 1;
            ++next; // cone vertices take an index but join no face
            out += "# cone\n";
            append_vertex(out,
                          (1.0 / count[cluster[k]]) * sum[cluster[k]],
                          opt.euclidean_view);
        }
    }

    char buf[64];
    for (int iy = 0; iy + 1 < g.ny; ++iy)
        for (int ix = 0; ix + 1 < g.nx; ++ix) {
            const std::size_t a = static_cast<std::size_t>(iy) * g.nx + ix;
            const std::size_t b = a + 1;
            const std::size_t c = b + g.nx;
            const std::size_t d = a + g.nx;
            const std::size_t tris[2][3] = {{a, b, c}, {a, c, d}};
            for (const auto& t : tris) {
                if (remap[t[0]] && remap[t[1]] && remap[t[2]]) {
                    std::snprintf(buf, sizeof buf, "f %d %d %d\n",
                                  remap[t[0]], remap[t[1]], remap[t[2]]);
                    out += buf;
                }
            }
        }
    return out;
}

std::string write_csv(const WeierstrassData& d, const GridSpec& g) {
    const std::vector<SurfaceJet> jets = sweep_curvature(d, g);
    std::string out = "x,y,K,H,Q,R,Lambda,class\n";
    out.reserve(out.size() + 96 * jets.size());
    for (const SurfaceJet& jt : jets) {
        append_num(out, jt.z.re);
        out += ',';
        append_num(out, jt.z.im);
        out += ',';
        append_num(out, jt.K);
        out += ',';
        append_num(out, jt.H);
        out += ',';
        append_num(out, jt.Q);
        out += ',';
        append_num(out, jt.R);
        out += ',';
        append_num(out, jt.Lambda);
        out += ',';
        out += point_class_label(jt.cls);
        out += '\n';
    }
    return out;
}

} // namespace lwz
