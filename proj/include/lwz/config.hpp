#pragma once

// Line-oriented surface description files:
//
//   h = <expr>                       Gauss map (required)
//   eta = <expr>                     eta = <expr> dz (required)
//   base = x,y                       base point, default 0,0
//   matrix = m11, m12, ..., m33      optional frame, 9 a+bj constants
//   domain = x0,x1,y0,y1             optional default sampling window
//
// Blank lines and lines starting with '#' are ignored.

#include <optional>
#include <string>

#include "lwz/domain.hpp"
#include "lwz/weierstrass.hpp"

namespace lwz {

struct Config {
    WeierstrassData data;
    std::optional<Mat3c> matrix;
    std::optional<Rect> domain;
};

/// Parses config text.  Throws Validation (or Syntax, from the expression
/// parser) with the offending line number in the message.
Config parse_config(const std::string& text);

/// Reads and parses the file; Validation if it cannot be read.
Config load_config(const std::string& path);

} // namespace lwz
