#ifndef TRICHAIN_PARSE_HPP
#define TRICHAIN_PARSE_HPP

#include <stdexcept>
#include <string>

#include "trichain/mpoly.hpp"
#include "trichain/varorder.hpp"

namespace trichain {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(std::string msg, int line_, int col_)
        : std::runtime_error(std::move(msg)), line(line_), col(col_) {}
};

/// Polynomial text: integer literals, variable names, + - * ^, parentheses.
/// Implicit multiplication is rejected; whitespace ignored.
/// line0 seeds error positions when parsing a line of a larger file.
MPoly parse_poly(const std::string& text, const VarOrder& order, int line0 = 1);

} // namespace trichain

#endif
