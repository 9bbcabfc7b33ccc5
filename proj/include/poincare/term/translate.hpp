// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "poincare/term/term.hpp"

namespace poincare {

/// Translation into the fragment where sqrt occurs only on variables:
///   sqrt(x) -> sqrt(x), sqrt(c) -> 1/2, sqrt(!a) -> !(sqrt a)_t,
///   sqrt(sqrt a) -> !a_t, sqrt(a op b) -> 1/2; commutes with !, + and *.
Term translate_t(const Term& t);

/// True when t is provably equal to t + 0 in every model: binary heads, and
/// negations or double square roots of regular terms.
bool syntactically_regular(const Term& t);

}  // namespace poincare
