// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

#include "poincare/exact/dyadic.hpp"
#include "poincare/exact/rational.hpp"

namespace poincare {

struct EmptyInterval : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dyadic s with a < s < b, minimal exponent first, then minimal numerator.
/// Requires 0 <= a < b <= 1; throws EmptyInterval when a >= b.
Dyadic find_dyadic_between(const Rational& a, const Rational& b);

}  // namespace poincare
