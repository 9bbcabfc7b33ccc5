// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "poincare/calculus/script.hpp"

namespace poincare {

enum class CheckFailure {
  bad_axiom_match,
  hypothesis_not_in_theory,
  bad_mp_shape,
  bad_index,
  goal_mismatch,
  mode_violation,
};

/// "bad-axiom-match", "hypothesis-not-in-theory", ...
std::string failure_name(CheckFailure f);

struct CheckReport {
  bool valid = false;
  /// Line number of the first failure; for goal-mismatch the last line (0 if none).
  std::size_t failing_line = 0;
  std::optional<CheckFailure> reason;
  std::size_t lines = 0;
  std::map<std::string, std::size_t> axiom_uses;

  /// "VALID" or "INVALID line <k>: <reason>".
  std::string verdict() const;
};

CheckReport check_proof(const ProofScript& script);

}  // namespace poincare
