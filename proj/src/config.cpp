#include "lwz/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace lwz {
namespace {

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

} // namespace

Config parse_config(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    expr::NodePtr h, eta;
    SplitComplex base;
    std::optional<Mat3c> matrix;
    std::optional<Rect> domain;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        try {
            const std::string t = trim(line);
            if (t.empty() || t[0] == '#')
                continue;
            const std::size_t eq = t.find('=');
            if (eq == std::string::npos)
                fail(ErrorCode::Validation, "expected 'key = value'");
            const std::string key = trim(t.substr(0, eq));
            const std::string value = trim(t.substr(eq + 1));
            if (key == "h") {
                h = expr::parse(value);
            } else if (key == "eta") {
                eta = expr::parse(value);
            } else if (key == "base") {
                const auto parts = split_commas(value);
                if (parts.size() != 2)
                    fail(ErrorCode::Validation, "base needs two numbers");
                base = {parse_number(parts[0]), parse_number(parts[1])};
            } else if (key == "matrix") {
                const auto parts = split_commas(value);
                if (parts.size() != 9)
                    fail(ErrorCode::Validation,
                         "matrix needs nine constants");
                Mat3c m{};
                for (int i = 0; i < 9; ++i)
                    m[i / 3][i % 3] = parse_constant(parts[i]);
                matrix = m;
            } else if (key == "domain") {
                const auto parts = split_commas(value);
                if (parts.size() != 4)
                    fail(ErrorCode::Validation, "domain needs four numbers");
                domain = Rect{parse_number(parts[0]), parse_number(parts[1]),
                              parse_number(parts[2]), parse_number(parts[3])};
            } else {
                fail(ErrorCode::Validation,
                     "unknown config key '" + key + "'");
            }
        } catch (const Error& e) {
            fail(e.code(), "config line " + std::to_string(line_no) + ": " +
                               e.what());
        }
    }
    if (!h || !eta)
        fail(ErrorCode::Validation, "config needs both h and eta lines");
    Config cfg;
    cfg.data = make_data(h, eta, base);
    cfg.matrix = matrix;
    cfg.domain = domain;
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorCode::Validation, "cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace lwz
