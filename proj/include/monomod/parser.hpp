#pragma once

#include <string>
#include <string_view>

#include "monomod/formula.hpp"

namespace monomod {

// Grammar (ASCII or UTF-8 symbols):
//   var   := [a-z][a-z0-9_]*
//   atom  := var | "#t" | "#f" | "(" form ")" | "S(" n ")" | "Pr(" form ")" | "PrR(" form ")"
//   unary := ("~" | "!" | "[]" | "<>")* atom
//   form  := unary (("&" | "|") unary)* ("->" form)?
// Throws ParseError carrying the byte offset.
Formula parse(std::string_view text);

// Canonical text; parse(render(f)) == f.
std::string render(const Formula& f);

}  // namespace monomod
