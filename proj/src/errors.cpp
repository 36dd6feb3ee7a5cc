#include "lwz/errors.hpp"
#include "lwz/tolerances.hpp"

#include <cstdlib>

namespace lwz {

const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::ZeroDivisor:      return "ZeroDivisor";
    case ErrorCode::DomainError:      return "DomainError";
    case ErrorCode::Overflow:         return "Overflow";
    case ErrorCode::Syntax:           return "Syntax";
    case ErrorCode::Quadrature:       return "Quadrature";
    case ErrorCode::Path:             return "Path";
    case ErrorCode::SingularPoint:    return "SingularPoint";
    case ErrorCode::NotSingular:      return "NotSingular";
    case ErrorCode::NotNull:          return "NotNull";
    case ErrorCode::Degenerate:       return "Degenerate";
    case ErrorCode::Inconclusive:     return "Inconclusive";
    case ErrorCode::NotConformal:     return "NotConformal";
    case ErrorCode::LightlikeFactor:  return "LightlikeFactor";
    case ErrorCode::GaussMapMismatch: return "GaussMapMismatch";
    case ErrorCode::FlatRegion:       return "FlatRegion";
    case ErrorCode::IllConditioned:   return "IllConditioned";
    case ErrorCode::SingularMatrix:   return "SingularMatrix";
    case ErrorCode::NotALineSymmetry: return "NotALineSymmetry";
    case ErrorCode::Validation:       return "Validation";
    }
    return "Unknown";
}

double tol_scale() {
    static const double scale = [] {
        const char* env = std::getenv("LWZ_TOL");
        if (!env) return 1.0;
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        return (end != env && v > 0.0) ? v : 1.0;
    }();
    return scale;
}

} // namespace lwz
