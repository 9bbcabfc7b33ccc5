// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/calculus/schema.hpp"
#include "poincare/term/term.hpp"

namespace poincare {

enum class ProofMode { ip, fragment };

std::string mode_name(ProofMode mode);
/// "ip" or "fragment".
std::optional<ProofMode> mode_from_name(std::string_view name);

struct Justification {
  enum class Type { axiom, hypothesis, td_member, modus_ponens };
  Type type = Type::hypothesis;
  SchemaId schema = SchemaId::C1;
  /// Explicit witness of an "axiom sQ5 s=<term>" line.
  std::optional<Term> witness;
  std::size_t i = 0;
  std::size_t j = 0;

  static Justification axiom(SchemaId id, std::optional<Term> witness = std::nullopt);
  static Justification hypothesis();
  static Justification td_member();
  static Justification modus_ponens(std::size_t i, std::size_t j);
};

struct ProofLine {
  std::size_t index = 0;
  Term term;
  Justification just;
};

struct ProofScript {
  std::vector<Term> theory;
  std::vector<ProofLine> lines;
  Term goal;
  ProofMode mode = ProofMode::ip;
};

/// Malformed script text; line is 1-based in the input.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(std::size_t line, const std::string& detail);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the line-oriented script format. A "mode: ip|fragment" line overrides
/// default_mode.
ProofScript parse_script(std::string_view text, ProofMode default_mode = ProofMode::ip);

/// Inverse of parse_script.
std::string write_script(const ProofScript& script);

std::string justification_text(const Justification& just);

}  // namespace poincare
