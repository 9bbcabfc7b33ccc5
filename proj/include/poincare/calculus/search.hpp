// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "poincare/calculus/script.hpp"
#include "poincare/term/term.hpp"

namespace poincare {

struct SearchLimits {
  /// Largest derived formula kept, counted in primitive AST nodes.
  std::size_t max_size = 24;
  /// Number of formulas selected for inference before giving up.
  std::size_t max_given = 2000;
  /// Longest script returned.
  std::size_t max_lines = 200;
};

/// Proof of goal from theory using W1-W4, C1 and modus ponens. Formulas are
/// explored in order of size (ties by printed text) as most general MP
/// consequences; the chosen derivation is then instantiated, with left-over
/// metavariables taken from the subterm pool of goal and theory. Every
/// returned script passes check_proof.
std::optional<ProofScript> bounded_proof_search(const Term& goal, const std::vector<Term>& theory,
                                                const SearchLimits& limits = {});

/// Distinct subterms of the given terms, ordered by size then printed text.
std::vector<Term> subterm_pool(const std::vector<Term>& terms);

}  // namespace poincare
