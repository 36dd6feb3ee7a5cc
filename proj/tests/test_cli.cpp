#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lwz/cli_app.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = lwz::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
    int n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0)
            ++n;
    return n;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("cli_test_" + name) {
        std::ofstream f(path, std::ios::binary);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("catalog lists every entry") {
    const auto r = run({"catalog"});
    CHECK(r.code == 0);
    for (const std::string name :
         {"enneper", "parabolic-helicoid", "parabolic-catenoid",
          "elliptic-catenoid", "bonnet", "flat-plane", "flat-bscroll"}) {
        CHECK(r.out.find(name) != std::string::npos);
    }
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"mesh"}).code == 2);
    CHECK(run({"verify", "bogus"}).code == 2);
    CHECK(run({"mesh", "no-such-entry.cfg"}).code == 2);
    CHECK(run({"transform", "enneper", "--matrix", "Q"}).code == 2);
    CHECK(run({"symmetry", "enneper", "--map", "rot90"}).code == 2);
    CHECK(run({"mesh", "enneper", "--grid", "3"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("mesh output starts at the base point") {
    const auto r = run({"mesh", "enneper", "--grid", "2x2", "--domain",
                        "0,0.5,0,0.5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("v 0 0 0\n", 0) == 0);
    CHECK(count_lines_starting(r.out, "v ") == 4);
    CHECK(count_lines_starting(r.out, "f ") == 2);

    // The euclidean view permutes coordinates without changing geometry.
    const auto e = run({"mesh", "enneper", "--grid", "2x2", "--domain",
                        "0,0.5,0,0.5", "--euclidean-view"});
    CHECK(e.code == 0);
    CHECK(e.out != r.out);
    CHECK(count_lines_starting(e.out, "v ") == 4);
}

TEST_CASE("identical invocations produce identical bytes") {
    const std::vector<std::string> args{"curvature", "enneper", "--grid",
                                        "7x5", "--domain", "-1,1,-1,1"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const auto v1 = run({"verify", "paracomplex"});
    const auto v2 = run({"verify", "paracomplex"});
    CHECK(v1.out == v2.out);
}

TEST_CASE("curvature tables carry the expected header and classes") {
    const auto r = run({"curvature", "flat-plane", "--grid", "3x3",
                        "--domain", "0,1,0,1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("x,y,K,H,Q,R,Lambda,class", 0) == 0);
    CHECK(count_lines_starting(r.out, "0.5,") == 3);

    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
        CHECK(line.find("umbilic") != std::string::npos);
        ++rows;
    }
    CHECK(rows == 9);
}

TEST_CASE("transform writes the image surface mesh") {
    const auto r = run({"transform", "enneper", "--matrix", "D", "--grid",
                        "2x2", "--domain", "0.2,0.4,0,0.1",
                        "--keep-singular"});
    CHECK(r.code == 0);
    CHECK(count_lines_starting(r.out, "v ") == 4);

    // Nine-constant specs go through the same conformal gate.
    const auto bad = run({"transform", "enneper", "--matrix",
                          "1,1,0,0,1,0,0,0,1", "--grid", "2x2"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("NotConformal") != std::string::npos);

    const auto spelled = run({"transform", "enneper", "--matrix",
                              "j,0,0,0,1,0,0,0,1", "--grid", "2x2",
                              "--domain", "0.2,0.4,0,0.1",
                              "--keep-singular"});
    CHECK(spelled.code == 0);
    CHECK(spelled.out == r.out);
}

TEST_CASE("symmetry reports are machine readable") {
    const auto r = run({"symmetry", "elliptic-catenoid", "--map",
                        "shift:3.141592653589793"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("detected").get<bool>());
    CHECK(j.at("translation")[0].get<double>() ==
          doctest::Approx(-3.141592653589793 / 2.0));
    CHECK_FALSE(j.at("translation_vanishes").get<bool>());

    const auto fam = run({"symmetry", "enneper", "--map", "negz",
                          "--family", "assoc", "--thetas", "-0.5,0,0.5"});
    CHECK(fam.code == 0);
    const auto fj = nlohmann::json::parse(fam.out);
    REQUIRE(fj.at("entries").size() == 3);
    for (const auto& row : fj.at("entries"))
        CHECK(row.at("survives").get<bool>());
}

TEST_CASE("config files drive every data-bearing command") {
    const TempFile cfg("surface.cfg",
                       "# catenoid written out by hand\n"
                       "h = ptan(z)\n"
                       "eta = 0.5*pcos(z)^2\n"
                       "base = 0,0\n"
                       "domain = -0.8,0.8,-0.6,0.6\n");

    const auto mesh = run({"mesh", cfg.path, "--grid", "4x4"});
    CHECK(mesh.code == 0);
    CHECK(count_lines_starting(mesh.out, "v ") == 16);

    const auto curv = run({"curvature", cfg.path, "--grid", "3x3"});
    CHECK(curv.code == 0);

    const auto sym = run({"symmetry", cfg.path, "--map", "negz"});
    CHECK(sym.code == 0);
    CHECK(nlohmann::json::parse(sym.out).at("detected").get<bool>());

    const TempFile framed("framed.cfg",
                          "h = z\neta = 1\n"
                          "matrix = j,0,0,0,1,0,0,0,1\n");
    CHECK(run({"curvature", framed.path}).code == 2);
    CHECK(run({"mesh", framed.path, "--grid", "2x2", "--domain",
               "0.1,0.4,0,0.05"})
              .code == 0);

    const TempFile broken("broken.cfg", "h = z\neta = pexp(\n");
    const auto bad = run({"mesh", broken.path});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("config line 2") != std::string::npos);
}

TEST_CASE("--out writes a file instead of stdout") {
    const std::string path = "cli_test_mesh.obj";
    const auto r = run({"mesh", "enneper", "--grid", "2x2", "--domain",
                        "0,0.5,0,0.5", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str().rfind("v 0 0 0\n", 0) == 0);
    f.close();
    std::remove(path.c_str());
}

TEST_CASE("verify scope output shape") {
    const auto r = run({"verify", "expr"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("suite") == "expr");
    CHECK(j.at("failed").get<int>() == 0);
    REQUIRE(j.at("cases").is_array());
    for (const auto& c : j.at("cases")) {
        CHECK(c.contains("id"));
        CHECK(c.at("status") == "pass");
        CHECK(c.contains("measured"));
        CHECK(c.contains("tolerance"));
    }
}
