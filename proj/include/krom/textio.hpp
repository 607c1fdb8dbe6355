#pragma once

// Concrete syntax for Krom programs:
//
//   program   := statement*
//   statement := atom '.' | atom ':-' atom '.'
//   atom      := [a-z][A-Za-z0-9_]*
//
// Whitespace between tokens is insignificant and '%' starts a comment that
// runs to the end of the line.

#include <string>
#include <string_view>

#include "krom/program.hpp"

namespace krom {

/// Throws ParseError on malformed or non-UTF-8 input.
Program parse(std::string_view text);

/// Facts first, then proper rules by (head, body); one statement per line.
std::string render(const Program& program);

/// Graphviz digraph with an edge b -> a per rule a :- b. Fact atoms get a
/// doubled border.
std::string to_dot(const Program& program);

}  // namespace krom
