// SPDX-License-Identifier: Apache-2.0
#include "poincare/calculus/checker.hpp"

#include <algorithm>

namespace poincare {

namespace {

std::optional<CheckFailure> check_line(const ProofScript& script, std::size_t k, CheckReport& report) {
  const ProofLine& line = script.lines[k - 1];
  const Justification& just = line.just;
  if (line.index != k) return CheckFailure::bad_index;
  const bool fragment = script.mode == ProofMode::fragment;
  if (fragment && !is_fragment(line.term)) return CheckFailure::mode_violation;
  switch (just.type) {
    case Justification::Type::axiom: {
      if (fragment && is_sqrt_schema(just.schema)) return CheckFailure::mode_violation;
      const auto bindings = match_schema(just.schema, line.term);
      if (!bindings) return CheckFailure::bad_axiom_match;
      if (just.witness && bindings->at("s") != *just.witness) return CheckFailure::bad_axiom_match;
      ++report.axiom_uses[schema_name(just.schema)];
      return std::nullopt;
    }
    case Justification::Type::hypothesis:
      if (std::find(script.theory.begin(), script.theory.end(), line.term) == script.theory.end())
        return CheckFailure::hypothesis_not_in_theory;
      return std::nullopt;
    case Justification::Type::td_member:
      if (!fragment) return CheckFailure::mode_violation;
      if (!is_TD_member(line.term)) return CheckFailure::bad_axiom_match;
      return std::nullopt;
    case Justification::Type::modus_ponens: {
      if (just.i < 1 || just.i >= k || just.j < 1 || just.j >= k) return CheckFailure::bad_index;
      const Term& a = script.lines[just.i - 1].term;
      const Term& b = script.lines[just.j - 1].term;
      if (b == t_imp(a, line.term) || a == t_imp(b, line.term)) return std::nullopt;
      return CheckFailure::bad_mp_shape;
    }
  }
  return CheckFailure::bad_axiom_match;
}

}  // namespace

std::string failure_name(CheckFailure f) {
  switch (f) {
    case CheckFailure::bad_axiom_match:
      return "bad-axiom-match";
    case CheckFailure::hypothesis_not_in_theory:
      return "hypothesis-not-in-theory";
    case CheckFailure::bad_mp_shape:
      return "bad-mp-shape";
    case CheckFailure::bad_index:
      return "bad-index";
    case CheckFailure::goal_mismatch:
      return "goal-mismatch";
    case CheckFailure::mode_violation:
      return "mode-violation";
  }
  return "unknown";
}

std::string CheckReport::verdict() const {
  if (valid) return "VALID";
  return "INVALID line " + std::to_string(failing_line) + ": " + (reason ? failure_name(*reason) : "unknown");
}

CheckReport check_proof(const ProofScript& script) {
  CheckReport report;
  report.lines = script.lines.size();
  for (std::size_t k = 1; k <= script.lines.size(); ++k) {
    if (const auto failure = check_line(script, k, report)) {
      report.failing_line = k;
      report.reason = failure;
      return report;
    }
  }
  if (script.lines.empty() || script.lines.back().term != script.goal) {
    report.failing_line = script.lines.size();
    report.reason = CheckFailure::goal_mismatch;
    return report;
  }
  report.valid = true;
  return report;
}

}  // namespace poincare
