// SPDX-License-Identifier: Apache-2.0
#include "poincare/calculus/script.hpp"

#include <charconv>
#include <sstream>

#include "poincare/term/syntax.hpp"

namespace poincare {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

std::size_t parse_index(std::string_view text, std::size_t line) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) throw ScriptError(line, "bad line index '" + std::string(text) + "'");
  return value;
}

Term parse_term(std::string_view text, std::size_t line) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ScriptError(line, std::string("term: ") + e.what());
  }
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    s = trim(s);
    if (s.empty()) return out;
    const auto end = s.find_first_of(" \t");
    out.push_back(s.substr(0, end));
    if (end == std::string_view::npos) return out;
    s = s.substr(end);
  }
}

Justification parse_justification(std::string_view text, std::size_t line) {
  const auto w = words(text);
  if (w.empty()) throw ScriptError(line, "missing justification");
  if (w[0] == "hyp" && w.size() == 1) return Justification::hypothesis();
  if (w[0] == "td" && w.size() == 1) return Justification::td_member();
  if (w[0] == "mp" && w.size() == 3) return Justification::modus_ponens(parse_index(w[1], line), parse_index(w[2], line));
  if (w[0] == "axiom" && w.size() >= 2) {
    const auto id = schema_from_name(w[1]);
    if (!id) throw ScriptError(line, "unknown schema '" + std::string(w[1]) + "'");
    if (w.size() == 2) return Justification::axiom(*id);
    const auto rest = trim(text.substr(text.find(w[1]) + w[1].size()));
    if (*id != SchemaId::sQ5 || !starts_with(rest, "s=")) throw ScriptError(line, "unexpected text after schema id");
    return Justification::axiom(*id, parse_term(rest.substr(2), line));
  }
  throw ScriptError(line, "bad justification '" + std::string(text) + "'");
}

}  // namespace

std::string mode_name(ProofMode mode) { return mode == ProofMode::ip ? "ip" : "fragment"; }

std::optional<ProofMode> mode_from_name(std::string_view name) {
  if (name == "ip") return ProofMode::ip;
  if (name == "fragment") return ProofMode::fragment;
  return std::nullopt;
}

Justification Justification::axiom(SchemaId id, std::optional<Term> witness) {
  Justification j;
  j.type = Type::axiom;
  j.schema = id;
  j.witness = std::move(witness);
  return j;
}

Justification Justification::hypothesis() { return {}; }

Justification Justification::td_member() {
  Justification j;
  j.type = Type::td_member;
  return j;
}

Justification Justification::modus_ponens(std::size_t i, std::size_t j) {
  Justification out;
  out.type = Type::modus_ponens;
  out.i = i;
  out.j = j;
  return out;
}

ScriptError::ScriptError(std::size_t line, const std::string& detail)
    : std::runtime_error("script line " + std::to_string(line) + ": " + detail), line_(line) {}

ProofScript parse_script(std::string_view text, ProofMode default_mode) {
  enum class Section { none, theory, proof };
  ProofScript script;
  script.mode = default_mode;
  Section section = Section::none;
  bool have_goal = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line == "theory:") {
      section = Section::theory;
    } else if (line == "proof:") {
      section = Section::proof;
    } else if (starts_with(line, "goal:")) {
      if (have_goal) throw ScriptError(line_no, "duplicate goal");
      script.goal = parse_term(line.substr(5), line_no);
      have_goal = true;
      section = Section::none;
    } else if (starts_with(line, "mode:")) {
      const auto mode = mode_from_name(trim(line.substr(5)));
      if (!mode) throw ScriptError(line_no, "unknown mode");
      script.mode = *mode;
    } else if (section == Section::theory) {
      script.theory.push_back(parse_term(line, line_no));
    } else if (section == Section::proof) {
      const auto colon = line.find(':');
      const auto semi = line.rfind(';');
      if (colon == std::string_view::npos || semi == std::string_view::npos || semi < colon)
        throw ScriptError(line_no, "expected '<k>: <term> ; <justification>'");
      ProofLine pl;
      pl.index = parse_index(trim(line.substr(0, colon)), line_no);
      pl.term = parse_term(line.substr(colon + 1, semi - colon - 1), line_no);
      pl.just = parse_justification(line.substr(semi + 1), line_no);
      script.lines.push_back(std::move(pl));
    } else {
      throw ScriptError(line_no, "text outside any section");
    }
  }
  if (!have_goal) throw ScriptError(line_no, "missing goal");
  return script;
}

std::string justification_text(const Justification& just) {
  switch (just.type) {
    case Justification::Type::axiom:
      return "axiom " + schema_name(just.schema) + (just.witness ? " s=" + print(*just.witness) : "");
    case Justification::Type::hypothesis:
      return "hyp";
    case Justification::Type::td_member:
      return "td";
    case Justification::Type::modus_ponens:
      return "mp " + std::to_string(just.i) + " " + std::to_string(just.j);
  }
  return {};
}

std::string write_script(const ProofScript& script) {
  std::ostringstream out;
  if (script.mode == ProofMode::fragment) out << "mode: fragment\n";
  out << "theory:\n";
  for (const auto& t : script.theory) out << "  " << print(t) << "\n";
  out << "proof:\n";
  for (const auto& line : script.lines)
    out << "  " << line.index << ": " << print(line.term) << " ; " << justification_text(line.just) << "\n";
  out << "goal: " << print(script.goal) << "\n";
  return out.str();
}

}  // namespace poincare
