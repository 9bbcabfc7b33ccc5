// SPDX-License-Identifier: Apache-2.0
#include "poincare/term/random.hpp"

#include "poincare/models/scalar.hpp"

namespace poincare {

namespace {

Term random_leaf(Rng& rng, unsigned vars) {
  const long pick = uniform_int(rng, 0, static_cast<long>(vars) + 2);
  if (pick < static_cast<long>(vars)) return Term::var(static_cast<unsigned>(pick) + 1);
  return Term::constant(static_cast<Const>(pick - static_cast<long>(vars)));
}

}  // namespace

Term random_term(Rng& rng, const TermShape& shape) {
  if (shape.max_depth == 0 || uniform_int(rng, 0, 3) == 0) return random_leaf(rng, shape.vars);
  TermShape sub = shape;
  sub.max_depth = shape.max_depth - 1;
  switch (uniform_int(rng, 0, shape.allow_sqrt ? 3 : 2)) {
    case 0:
      return Term::neg(random_term(rng, sub));
    case 1:
      return Term::oplus(random_term(rng, sub), random_term(rng, sub));
    case 2:
      return Term::bullet(random_term(rng, sub), random_term(rng, sub));
    default:
      return Term::sqrt(random_term(rng, sub));
  }
}

Term random_closed_term(Rng& rng, unsigned max_depth) {
  TermShape shape{max_depth, 0, false};
  return random_term(rng, shape);
}

}  // namespace poincare
