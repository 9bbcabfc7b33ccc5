// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/algebra/signature.hpp"
#include "poincare/exact/dyadic.hpp"
#include "poincare/term/term.hpp"

namespace poincare {

enum class SchemaId {
  W1, W2, W3, W4,
  C1, C2, C3, C4, C5, C6,
  P1, P2, P3, P4, P5,
  sQ1, sQ2, sQ3, sQ4, sQ5,
};

const std::vector<SchemaId>& all_schemas();
std::string schema_name(SchemaId id);
std::optional<SchemaId> schema_from_name(std::string_view name);
bool is_sqrt_schema(SchemaId id);

/// Metavariable name -> bound term ("alpha", "beta", "gamma", "s"). Fraction
/// schemata bind their operands as "a"/"b"/"result".
using Bindings = std::map<std::string, Term>;

/// Matches t against the schema. Biconditional schemata (C2-C6, P2, P4, P5,
/// sQ1-sQ4) accept the full biconditional and each single direction.
std::optional<Bindings> match_schema(SchemaId id, const Term& t);

/// First-order matching of a pattern whose variables are metavariables.
bool match_pattern(const Term& pattern, const Term& t, std::map<unsigned, Term>& bindings);

/// Replaces each variable x_i of the pattern by bindings[i].
Term instantiate(const Term& pattern, const std::map<unsigned, Term>& bindings);

/// Whether s is closed and its value is at least theta().
bool valid_threshold_witness(const Term& s);

/// ((1/4 * x) + (1/4 * y)) -> s.
Term threshold_term(const Term& x, const Term& y, const Term& s);

/// Membership in the union of the four threshold families over atomic cores
/// x in {x_i, 0, 1/2, 1}. For a constant core the position of sqrt(x) holds
/// its translation 1/2.
bool is_TD_member(const Term& t);

/// Random instance of a schema: metavariables become random terms of depth at
/// most max_depth over x1..x{vars}; sQ5 uses the given witnesses.
Term random_instance(SchemaId id, Rng& rng, unsigned max_depth, unsigned vars, const std::vector<Dyadic>& witnesses);

}  // namespace poincare
