#pragma once

#include "qons/freealg.hpp"

namespace qons {

struct ParseError : Error {
    ParseError(int line, int col, const std::string& message)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " +
                message),
          line(line),
          col(col),
          message(message) {}
    int line;
    int col;
    std::string message;
};

/// Expression grammar shared by the CLI and the witness format:
/// integers, q, generator names, + - * / ^, parentheses, [x,y] and [x,y]_q.
/// Exponents may be negative (q^-1). Division requires a scalar divisor.
NcPoly parse_expr(const std::string& source, const AlphabetPtr& alphabet);

/// Scalar-only entry point (no generators in scope).
Scalar parse_scalar_text(const std::string& source);

}  // namespace qons
