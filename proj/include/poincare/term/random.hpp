// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "poincare/algebra/signature.hpp"
#include "poincare/term/term.hpp"

namespace poincare {

struct TermShape {
  unsigned max_depth = 4;
  unsigned vars = 3;
  bool allow_sqrt = true;
};

/// Random term of depth at most shape.max_depth over x1..x{shape.vars}.
Term random_term(Rng& rng, const TermShape& shape);

/// Random closed term over the constants, without sqrt.
Term random_closed_term(Rng& rng, unsigned max_depth);

}  // namespace poincare
