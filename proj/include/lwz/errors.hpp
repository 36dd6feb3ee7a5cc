#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lwz {

enum class ErrorCode {
    ZeroDivisor,      // division by a lightlike (zero-modulus) number
    DomainError,      // argument outside the operation's domain
    Overflow,         // floating range exceeded, caller must rescale
    Syntax,           // malformed expression text
    Quadrature,       // adaptive refinement could not reach tolerance
    Path,             // integration path crosses an evaluation error
    SingularPoint,    // |h|^2 = 1 within tolerance
    NotSingular,      // curve expected inside the singular locus is not
    NotNull,          // generating curve fails <g',g'> = 0
    Degenerate,       // generating directions linearly dependent / metric collapse
    Inconclusive,     // flat classification contradicts K = -QR/Lambda^2
    NotConformal,     // matrix fails tA I(1,2) A = c I(1,2)
    LightlikeFactor,  // conformal factor c has |c|^2 = 0
    GaussMapMismatch, // class comparison requires equal Gauss maps
    FlatRegion,       // class comparison requires |K| > 0 on the region
    IllConditioned,   // sample covectors do not determine the linear part
    SingularMatrix,   // matrix not invertible over the split-complex ring
    NotALineSymmetry, // linear part not conjugate to a timelike line symmetry
    Validation,       // bad user-supplied parameter (grid counts, ranges, ...)
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with the byte offset of the offending token and a
/// human-readable set of expected tokens.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& expected)
        : Error(ErrorCode::Syntax,
                "syntax error at offset " + std::to_string(offset) +
                    ": expected " + expected),
          offset_(offset), expected_(expected) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace lwz
