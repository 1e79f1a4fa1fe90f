#pragma once

#include <string_view>

#include "evensym/superfunction.hpp"

namespace evensym {

// Expression grammar shared by both coefficient modes:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' (integer | atom))*
//   atom   := integer | 't' | coordinate | 'sin' '(' phase ')' | 'cos' '(' phase ')'
//           | 'e' '[' integer ']' | '(' expr ')'
//   phase  := ('-')? (integer '*')? coordinate (('+' | '-') (integer '*')? coordinate)*
// Coordinates are x1..xd.  An integer right of '^' is a power of a scalar;
// any other operand makes '^' the graded product, so generators chain as
// e[1]^e[2].  In torus mode coordinates may appear only inside sin/cos.
// Errors carry line and column of the offending token.

CoeffFn parse_coeff(const RingSpec& spec, std::string_view text);
Superfunction parse_superfunction(const RingSpec& spec, int rank, std::string_view text);

}  // namespace evensym
