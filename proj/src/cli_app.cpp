#include "lwz/cli_app.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lwz/catalog.hpp"
#include "lwz/config.hpp"
#include "lwz/goursat.hpp"
#include "lwz/mesh.hpp"
#include "lwz/symmetry.hpp"
#include "lwz/verify.hpp"

namespace lwz::cli {
namespace {

using nlohmann::ordered_json;

// ===========================================================================
// Argument parsing helpers
// ===========================================================================

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(trim(s.substr(start)));
            return out;
        }
        out.push_back(trim(s.substr(start, comma - start)));
        start = comma + 1;
    }
}

double parse_number(const std::string& s) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = b + s.size();
    const auto r = std::from_chars(b, e, v);
    if (r.ec != std::errc{} || r.ptr != e)
        fail(ErrorCode::Validation, "expected a number, got '" + s + "'");
    return v;
}

/// "a+bj" style constant: anything the expression parser folds to a
/// literal is accepted.
SplitComplex parse_constant(const std::string& s) {
    const expr::NodePtr e = expr::parse(s);
    if (e->kind != expr::NodeKind::Literal)
        fail(ErrorCode::Validation,
             "expected a constant, got the expression '" + s + "'");
    return e->value;
}

GridSpec parse_grid(const Rect& rect, const std::string& s) {
    const std::size_t x = s.find('x');
    if (x == std::string::npos || x == 0 || x + 1 == s.size())
        fail(ErrorCode::Validation,
             "expected a grid like 33x17, got '" + s + "'");
    GridSpec g;
    g.rect = rect;
    g.nx = static_cast<int>(parse_number(s.substr(0, x)));
    g.ny = static_cast<int>(parse_number(s.substr(x + 1)));
    return g;
}

Rect parse_rect(const std::string& s) {
    const auto parts = split_commas(s);
    if (parts.size() != 4)
        fail(ErrorCode::Validation,
             "expected a domain like x0,x1,y0,y1, got '" + s + "'");
    return {parse_number(parts[0]), parse_number(parts[1]),
            parse_number(parts[2]), parse_number(parts[3])};
}

Mat3c parse_matrix_spec(const std::string& s) {
    if (s == "J")
        return conjugation_matrix();
    if (s == "D")
        return duality_matrix();
    if (s == "JD")
        return conj_duality_matrix();
    const std::size_t colon = s.find(':');
    if (colon != std::string::npos) {
        const std::string head = s.substr(0, colon);
        const std::string tail = s.substr(colon + 1);
        if (head == "assoc")
            return associated_matrix(parse_number(tail));
        if (head == "anti")
            return anti_isometric_matrix(parse_number(tail));
        if (head == "lopezros")
            return lopez_ros_matrix(parse_number(tail));
        fail(ErrorCode::Validation,
             "unknown matrix family '" + head +
                 "' (expected assoc, anti, or lopezros)");
    }
    const auto parts = split_commas(s);
    if (parts.size() != 9)
        fail(ErrorCode::Validation,
             "expected J, D, JD, assoc:theta, anti:theta, lopezros:lambda, "
             "or nine comma-separated constants");
    Mat3c m{};
    for (std::size_t i = 0; i < 9; ++i)
        m[i / 3][i % 3] = parse_constant(parts[i]);
    return m;
}

DomainIsometry parse_map(const std::string& s) {
    if (s == "zbar")
        return {{1.0, 0.0}, {}, true};
    if (s == "negz")
        return {{-1.0, 0.0}, {}, false};
    if (s == "negzbar")
        return {{-1.0, 0.0}, {}, true};
    if (s.rfind("shift:", 0) == 0)
        return {{1.0, 0.0}, parse_constant(s.substr(6)), false};
    fail(ErrorCode::Validation,
         "unknown map '" + s +
             "' (expected zbar, negz, negzbar, or shift:a+bj)");
}

// ===========================================================================
// Surface loading
// ===========================================================================

struct Loaded {
    WeierstrassData data;
    std::optional<Mat3c> frame; // config-supplied conformal matrix
    Rect domain{-1.0, 1.0, -1.0, 1.0};
};

/// An exact catalog name wins; anything else is read as a config file.
Loaded load_surface(const std::string& spec, double lambda) {
    const auto& names = catalog_names();
    if (std::find(names.begin(), names.end(), spec) != names.end()) {
        CatalogEntry e = catalog_entry(spec, lambda);
        return {std::move(e.data), std::nullopt, e.domain};
    }
    Config c = load_config(spec);
    Loaded l{std::move(c.data), c.matrix, {}};
    l.domain = c.domain ? *c.domain : Rect{-1.0, 1.0, -1.0, 1.0};
    return l;
}

void emit(const std::string& text, const std::string& path,
          std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        fail(ErrorCode::Validation, "cannot open '" + path + "' for writing");
    f << text;
}

ordered_json vec_json(const Vec3& v) {
    return ordered_json::array({v[0], v[1], v[2]});
}

ordered_json mat_json(const Mat3& m) {
    return ordered_json::array({vec_json(m[0]), vec_json(m[1]),
                                vec_json(m[2])});
}

} // namespace

// ===========================================================================
// Command wiring
// ===========================================================================

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"timelike minimal surfaces from split-complex "
                 "Weierstrass data"};
    app.name("lwz");
    app.require_subcommand(1);

    struct {
        std::string surface;
        std::string grid;
        std::string domain;
        std::string matrix;
        std::string map;
        std::string family;
        std::string thetas = "-1,-0.5,0,0.5,1";
        std::string out_path;
        std::string scope = "all";
        double lambda = 2.0;
        int samples = 10;
        std::uint64_t seed = 7;
        bool euclidean_view = false;
        bool keep_singular = false;
    } opt;

    const auto add_surface_opts = [&](CLI::App* sub, bool with_grid) {
        sub->add_option("surface", opt.surface,
                        "catalog entry name or config file path")
            ->required();
        sub->add_option("--lambda", opt.lambda,
                        "deformation parameter for the bonnet entry");
        if (with_grid) {
            sub->add_option("--grid", opt.grid, "lattice size, e.g. 33x17");
            sub->add_option("--domain", opt.domain,
                            "parameter rectangle x0,x1,y0,y1");
            sub->add_option("--out", opt.out_path,
                            "write to a file instead of stdout");
        }
    };

    int rc = 0;

    CLI::App* cat = app.add_subcommand("catalog", "list built-in surfaces");
    cat->callback([&] {
        for (const auto& name : catalog_names()) {
            const CatalogEntry e = catalog_entry(name);
            out << name << "\n    " << e.summary << "\n";
        }
    });

    const auto grid_for = [&](const Loaded& l) {
        const Rect r = opt.domain.empty() ? l.domain : parse_rect(opt.domain);
        return opt.grid.empty() ? GridSpec{r, 33, 33} : parse_grid(r, opt.grid);
    };
    const auto mesh_options = [&] {
        MeshOptions m;
        m.skip_singular = !opt.keep_singular;
        m.euclidean_view = opt.euclidean_view;
        return m;
    };

    CLI::App* mesh = app.add_subcommand("mesh", "write a Wavefront OBJ mesh");
    add_surface_opts(mesh, true);
    mesh->add_flag("--euclidean-view", opt.euclidean_view,
                   "emit coordinates as (x2, x3, x1)");
    mesh->add_flag("--keep-singular", opt.keep_singular,
                   "keep vertices where the metric degenerates");
    mesh->callback([&] {
        Loaded l = load_surface(opt.surface, opt.lambda);
        const GridSpec g = grid_for(l);
        Surface s = l.frame ? Surface{std::move(l.data), *l.frame, false}
                            : Surface{std::move(l.data)};
        emit(write_obj(s, g, mesh_options()), opt.out_path, out);
    });

    CLI::App* curv =
        app.add_subcommand("curvature", "write a CSV curvature table");
    add_surface_opts(curv, true);
    curv->callback([&] {
        Loaded l = load_surface(opt.surface, opt.lambda);
        if (l.frame)
            fail(ErrorCode::Validation,
                 "curvature tables describe the raw data; drop 'matrix =' "
                 "from the config or use the transform command");
        const GridSpec g = grid_for(l);
        emit(write_csv(l.data, g), opt.out_path, out);
    });

    CLI::App* tr = app.add_subcommand(
        "transform", "mesh the surface transformed by a conformal matrix");
    add_surface_opts(tr, true);
    tr->add_option("--matrix", opt.matrix,
                   "J, D, JD, assoc:theta, anti:theta, lopezros:lambda, or "
                   "nine constants")
        ->required();
    tr->add_flag("--euclidean-view", opt.euclidean_view,
                 "emit coordinates as (x2, x3, x1)");
    tr->add_flag("--keep-singular", opt.keep_singular,
                 "keep vertices where the metric degenerates");
    tr->callback([&] {
        Loaded l = load_surface(opt.surface, opt.lambda);
        Mat3c a = parse_matrix_spec(opt.matrix);
        conformal_check(a);
        if (l.frame)
            a = a * *l.frame;
        const GridSpec g = grid_for(l);
        const Surface s{std::move(l.data), a, false};
        emit(write_obj(s, g, mesh_options()), opt.out_path, out);
    });

    CLI::App* sym = app.add_subcommand(
        "symmetry", "fit an ambient isometry to a domain map");
    add_surface_opts(sym, false);
    sym->add_option("--map", opt.map,
                    "zbar, negz, negzbar, or shift:a+bj")
        ->required();
    sym->add_option("--family", opt.family,
                    "sweep a deformation family: assoc or anti");
    sym->add_option("--thetas", opt.thetas,
                    "family parameters, comma separated");
    sym->add_option("--samples", opt.samples, "number of probe points");
    sym->add_option("--seed", opt.seed, "probe-point generator seed");
    sym->add_option("--domain", opt.domain,
                    "parameter rectangle x0,x1,y0,y1");
    sym->add_option("--out", opt.out_path,
                    "write to a file instead of stdout");
    sym->callback([&] {
        Loaded l = load_surface(opt.surface, opt.lambda);
        const Rect r = opt.domain.empty() ? l.domain : parse_rect(opt.domain);
        const DomainIsometry g = parse_map(opt.map);
        const auto samples = sample_random(r, opt.samples, opt.seed);
        ordered_json j;
        j["surface"] = opt.surface;
        j["map"] = opt.map;
        if (opt.family.empty()) {
            const Surface s = l.frame
                                  ? Surface{std::move(l.data), *l.frame, false}
                                  : Surface{std::move(l.data)};
            const auto iso = detect(s, g, samples);
            j["detected"] = iso.has_value();
            if (iso) {
                j["linear"] = mat_json(iso->linear);
                j["translation"] = vec_json(iso->translation);
                j["residual"] = iso->residual;
                j["orientation_reversing"] = iso->orientation_reversing;
                j["translation_vanishes"] = iso->translation_vanishes;
            }
        } else {
            FamilyKind kind;
            if (opt.family == "assoc")
                kind = FamilyKind::Associated;
            else if (opt.family == "anti")
                kind = FamilyKind::AntiIsometric;
            else
                fail(ErrorCode::Validation,
                     "unknown family '" + opt.family +
                         "' (expected assoc or anti)");
            std::vector<double> thetas;
            for (const auto& t : split_commas(opt.thetas))
                thetas.push_back(parse_number(t));
            j["family"] = opt.family;
            j["entries"] = ordered_json::array();
            for (const auto& e :
                 family_report(l.data, g, kind, thetas, samples)) {
                ordered_json row;
                row["theta"] = e.theta;
                row["survives"] = e.survives;
                if (e.survives) {
                    row["linear"] = mat_json(e.linear);
                    row["residual"] = e.residual;
                }
                j["entries"].push_back(row);
            }
        }
        emit(j.dump(2) + "\n", opt.out_path, out);
    });

    CLI::App* ver =
        app.add_subcommand("verify", "run the built-in check suites");
    ver->add_option("scope", opt.scope, "suite name or 'all'");
    ver->callback([&] {
        const verify::SuiteResult r = verify::run_suite(opt.scope);
        out << verify::to_json(r);
        rc = r.failed == 0 ? 0 : 1;
    });

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("lwz");
        for (const auto& a : args)
            argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << error_code_name(e.code()) << ": " << e.what() << "\n";
        const bool usage = e.code() == ErrorCode::Validation ||
                           e.code() == ErrorCode::Syntax;
        return usage ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

} // namespace lwz::cli
