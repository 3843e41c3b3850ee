#pragma once

#include <string_view>

#include "uplogic/error.hpp"
#include "uplogic/formula.hpp"

namespace uplogic {

// Likelihood formula grammar (whitespace-insensitive, # starts a comment):
//   lformula := basic | "~" lformula | lformula "&" lformula
//             | lformula "|" lformula | "(" lformula ")"
//   basic    := term rel rat
//   term     := signed { ("+"|"-") signed }
//   signed   := ["-"] [rat] "l" "(" prop ")"
//   rel      := ">=" | "<=" | ">" | "<" | "="
//   rat      := ["-"] int ["/" int]
//   prop     := ident | "true" | "false" | "~" prop | prop "&" prop
//             | prop "|" prop | prop "=>" prop | prop "<=>" prop
//             | "(" prop ")"
// Precedence: ~ over & over |, left-associative; => binds below | and is
// right-associative; <=> binds lowest. An omitted coefficient means 1.
// Throws ParseError with line/column on malformed input.
LPtr parse_lformula(std::string_view text);

// Parses a whole string as a propositional formula.
PropPtr parse_prop(std::string_view text);

}  // namespace uplogic
