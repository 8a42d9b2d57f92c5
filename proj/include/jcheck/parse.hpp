#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "jcheck/polynomial.hpp"

namespace jcheck {

/// Syntax or semantic error in polynomial text, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Grammar:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := integer ('/' integer)? | identifier | '(' expr ')'
///
/// Identifiers match [A-Za-z][A-Za-z0-9]* and must name a ring variable.
/// Juxtaposition ("2X", "X Y") is rejected. Fraction literals are only legal
/// in characteristic 0. `line` is reported in errors.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1);

}  // namespace jcheck
