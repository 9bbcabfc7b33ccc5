// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "poincare/term/term.hpp"

namespace poincare {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, unbound_token };

  ParseError(Kind kind, std::size_t column, const std::string& detail);

  Kind kind() const { return kind_; }
  /// 1-based column of the offending character.
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t column_;
};

/// Parses the surface grammar; derived connectives are expanded into primitives.
///   constants 0, 1, 1/2; variables x1, x2, ...; prefix ! and sqrt(...)
///   binary, tightest first: * & | + | /\ \/ | -> (right) | <->
Term parse(std::string_view text);

/// Minimal-parenthesis rendering of the primitive AST; parse(print(t)) == t.
std::string print(const Term& t);

/// Constructor form, e.g. "Oplus(Neg(Var 1), Const(half))".
std::string describe(const Term& t);

}  // namespace poincare
