#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "asgl/place.hpp"
#include "asgl/ratfunc.hpp"

namespace asgl {

/**
 * Syntax tree of an element of F_p(t, x).
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor (('*' | '/') factor)*
 *   factor := ['-'] atom ['^' natural]
 *   atom   := natural | 't' | 'x' | '(' expr ')'
 *
 * '^' binds tighter than unary minus, so -x^2 is -(x^2).
 */
struct ElementExpr {
  enum class Kind { kNumber, kT, kX, kAdd, kSub, kMul, kDiv, kNeg, kPow };
  Kind kind = Kind::kNumber;
  std::string digits;          // kNumber
  unsigned long long exponent = 0;  // kPow
  std::size_t offset = 0;      // byte offset of the node's first token
  std::vector<ElementExpr> children;

  // Fully parenthesized rendering, for debugging and tests.
  std::string to_string() const;
};

/// Throws ParseError with the byte offset of the offending token.
ElementExpr parse_element(std::string_view input);
/// Integer literals are reduced mod p; throws DomainError on division by zero.
RatFunc evaluate(const ElementExpr& expr, const FieldPtr& field);
RatFunc parse_ratfunc(std::string_view input, const FieldPtr& field);

/// "pt:<monic irreducible polynomial in x>", "inf" or "gauss".
Place parse_place(std::string_view input, const FieldPtr& field);

struct CommandResult {
  int exit_code = 0;
  std::string output;  // stdout
  std::string error;   // stderr
};

/**
 * Runs one invocation; args excludes the program name. Exit codes: 0 done,
 * 2 parse or configuration error, 3 some verdict is UNKNOWN_AT_PRECISION.
 */
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace asgl
