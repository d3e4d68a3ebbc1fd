#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "motzeta/motive.hpp"

namespace motzeta {

// Syntax error with source position and the token set that would have been
// accepted at that point.
struct ParseError : std::runtime_error {
    int line;
    int column;
    std::vector<std::string> expected;

    ParseError(const std::string& msg, int line, int column, std::vector<std::string> expected);
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := 'L' | 'A' nat | 'P' nat | 'Gm' ('^' nat)?
//           | 'pt' '(' nat ')' | 'coh' '(' path ')' | '(' expr ')'
// Whitespace insensitive; '+', '-' and '*' are left-associative. coh(path)
// loads the cohomology JSON file at parse time.
MotivePtr parse_motive(std::string_view src);

// Inverse of parse_motive up to structural equality, with minimal parentheses.
std::string print_motive(const MotiveExpr& x);

}  // namespace motzeta
