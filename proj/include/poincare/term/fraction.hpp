// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>

#include "poincare/exact/dyadic.hpp"
#include "poincare/term/term.hpp"

namespace poincare {

/// a/2^n with a <= 2^n.
struct FracSpec {
  unsigned long a = 0;
  unsigned long n = 0;
  friend bool operator==(const FracSpec&, const FracSpec&) = default;
};

/// Canonical fraction term. 1/2^1 is 1/2, 1/2^n is (1/2^(n-1)) * 1/2, and a/2^n is the
/// left-nested sum of a copies of 1/2^n. a = 0 gives the constant 0 and a/2^0 = 1
/// gives the constant 1. Throws std::invalid_argument if a > 2^n.
Term frac_term(const FracSpec& spec);

/// Inverse of frac_term. The constant 0 is reported as (0, 0) and 1 as (1, 0).
std::optional<FracSpec> recognize_frac(const Term& t);

/// The term 1/4 = 1/2 * 1/2.
Term quarter_term();

struct NotClosed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Value of a closed term in the dyadic chain; throws NotClosed on variables or sqrt.
Dyadic const_eval(const Term& t);
/// const_eval, or none when the term is not closed.
std::optional<Dyadic> try_const_eval(const Term& t);

}  // namespace poincare
