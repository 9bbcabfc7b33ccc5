// SPDX-License-Identifier: Apache-2.0
// Command-line front end: parse, eval, translate, taut, suite, check, search.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "poincare/algebra/suites.hpp"
#include "poincare/calculus/checker.hpp"
#include "poincare/calculus/script.hpp"
#include "poincare/calculus/search.hpp"
#include "poincare/calculus/semantics.hpp"
#include "poincare/models/bloch.hpp"
#include "poincare/models/chain.hpp"
#include "poincare/models/square.hpp"
#include "poincare/term/eval.hpp"
#include "poincare/term/syntax.hpp"
#include "poincare/term/translate.hpp"

namespace {

using namespace poincare;

constexpr long kSampleDen = 64;
constexpr std::size_t kGridLimit = 100000;

struct RunConfig {
  std::string model = "octagon";
  unsigned long grid = 8;
  std::size_t random = 0;
  std::uint64_t seed = 0;
  unsigned long denom = 4;
  std::string mode = "ip";
  std::string suite;
  std::vector<std::string> assign;
  std::vector<std::string> hyps;
  std::size_t max_size = SearchLimits{}.max_size;
  std::size_t max_given = SearchLimits{}.max_given;

  std::string describe() const {
    std::ostringstream out;
    out << "# config model=" << model << " grid=" << grid << " random=" << random << " seed=" << seed
        << " denom=" << denom << " mode=" << mode;
    if (!suite.empty()) out << " suite=" << suite;
    return out.str();
  }
};

/// Failure reported to the user with exit code 1.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using AnyModel = std::variant<BlochModel, SquareRational, SquareDyadic, IntervalModel, DyadicModel>;

AnyModel make_model(const RunConfig& cfg) {
  if (cfg.model == "bloch") return BlochModel(cfg.grid, kSampleDen);
  if (cfg.model == "disk") return make_disk(cfg.grid);
  if (cfg.model == "octagon") return make_octagon(cfg.denom);
  if (cfg.model == "square") return make_square(cfg.denom);
  if (cfg.model == "interval") return make_interval(cfg.grid);
  if (cfg.model == "dyadic") return make_dyadic_chain(cfg.denom);
  throw CliError("unknown model: " + cfg.model);
}

Term parse_or_throw(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw CliError(e.what());
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw CliError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

unsigned variable_index(const std::string& name) {
  const std::string digits = !name.empty() && name[0] == 'x' ? name.substr(1) : name;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits == "0")
    throw CliError("bad variable name in --assign: " + name);
  return static_cast<unsigned>(std::stoul(digits));
}

template <Model M>
Interpretation<ElementOf<M>> parse_assignments(const M& m, const std::vector<std::string>& assign) {
  Interpretation<ElementOf<M>> e;
  for (const auto& a : assign) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw CliError("--assign expects k=v, got " + a);
    try {
      e[variable_index(a.substr(0, eq))] = m.parse(a.substr(eq + 1));
    } catch (const InvalidElement& ex) {
      throw CliError(std::string("invalid-element: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
      throw CliError(std::string("invalid-element: ") + ex.what());
    }
  }
  return e;
}

int cmd_parse(const std::string& text) {
  const Term t = parse_or_throw(text);
  std::cout << print(t) << "\n" << describe(t) << "\n";
  return 0;
}

int cmd_translate(const std::string& text) {
  std::cout << print(translate_t(parse_or_throw(text))) << "\n";
  return 0;
}

int cmd_eval(const RunConfig& cfg, const std::string& text) {
  const Term t = parse_or_throw(text);
  return std::visit(
      [&](const auto& m) {
        const auto e = parse_assignments(m, cfg.assign);
        try {
          const auto value = evaluate(t, m, e);
          std::cout << m.render(value) << "  p=" << m.probability(value).str() << "\n";
        } catch (const UnassignedVariable& ex) {
          throw CliError(std::string("unassigned-variable: ") + ex.what());
        }
        return 0;
      },
      make_model(cfg));
}

int cmd_taut(const RunConfig& cfg, const std::string& text) {
  const Term t = parse_or_throw(text);
  return std::visit(
      [&](const auto& m) {
        const TautologyConfig tc{true, kGridLimit, cfg.random, cfg.seed};
        const auto r = tautology_search(t, m, tc);
        if (!r.counterexample) {
          std::cout << "TAUT-ON-SAMPLES\n";
          return 0;
        }
        std::cout << "COUNTEREXAMPLE " << render_interpretation(m, *r.counterexample) << "\n";
        return 1;
      },
      make_model(cfg));
}

int cmd_suite(const RunConfig& cfg) {
  const SampleSource src = cfg.random > 0 ? SampleSource::random(cfg.random, cfg.seed) : SampleSource::exhaustive();
  return std::visit(
      [&](const auto& m) {
        std::vector<AxiomReport> reports;
        try {
          reports = check_axiom_suite(m, cfg.suite, src);
        } catch (const std::invalid_argument& ex) {
          throw CliError(ex.what());
        }
        bool ok = true;
        for (const auto& r : reports) {
          std::cout << r.line() << "\n";
          ok = ok && r.ok();
        }
        return ok ? 0 : 1;
      },
      make_model(cfg));
}

int cmd_check(const RunConfig& cfg, const std::string& path) {
  ProofScript script;
  try {
    script = parse_script(read_input(path), *mode_from_name(cfg.mode));
  } catch (const ScriptError& ex) {
    throw CliError(std::string("script-error: ") + ex.what());
  }
  const auto report = check_proof(script);
  std::cout << report.verdict() << "\n";
  return report.valid ? 0 : 1;
}

int cmd_search(const RunConfig& cfg, const std::string& text) {
  const Term goal = parse_or_throw(text);
  std::vector<Term> theory;
  for (const auto& h : cfg.hyps) theory.push_back(parse_or_throw(h));
  SearchLimits limits;
  limits.max_size = cfg.max_size;
  limits.max_given = cfg.max_given;
  const auto script = bounded_proof_search(goal, theory, limits);
  if (!script) {
    std::cout << "SEARCH-EXHAUSTED\n";
    return 1;
  }
  std::cout << write_script(*script);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact models and proof tools for irreversible Poincare logic"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--model", cfg.model, "bloch|disk|octagon|square|interval|dyadic")
      ->check(CLI::IsMember({"bloch", "disk", "octagon", "square", "interval", "dyadic"}));
  app.add_option("--assign", cfg.assign, "Variable assignment k=v (repeatable)")->allow_extra_args(false);
  app.add_option("--grid", cfg.grid, "Grid resolution for rational carriers")->check(CLI::PositiveNumber);
  app.add_option("--random", cfg.random, "Number of seeded random samples");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--denom", cfg.denom, "Exponent n of the dyadic slice 2^n")->check(CLI::Range(1, 20));
  app.add_option("--mode", cfg.mode, "Proof mode")->check(CLI::IsMember({"ip", "fragment"}));
  app.add_option("--suite", cfg.suite, "Axiom suite: MV|QMV|SQMV|SQPMV|PMVHALF|IP");
  app.add_option("--hyp", cfg.hyps, "Theory member for search (repeatable)")->allow_extra_args(false);
  app.add_option("--max-size", cfg.max_size, "Search: largest formula size");
  app.add_option("--max-given", cfg.max_given, "Search: formulas selected before giving up");

  std::string term_text;
  std::string path;
  auto* parse_cmd = app.add_subcommand("parse", "Print a term and its primitive form");
  parse_cmd->add_option("term", term_text)->required();
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term in a model");
  eval_cmd->add_option("term", term_text)->required();
  auto* translate_cmd = app.add_subcommand("translate", "Print the PMV(1/2)-translation of a term");
  translate_cmd->add_option("term", term_text)->required();
  auto* taut_cmd = app.add_subcommand("taut", "Search for a counterexample to a tautology");
  taut_cmd->add_option("term", term_text)->required();
  auto* suite_cmd = app.add_subcommand("suite", "Check an axiom suite in a model");
  auto* check_cmd = app.add_subcommand("check", "Check a proof script ('-' reads stdin)");
  check_cmd->add_option("script", path)->required();
  auto* search_cmd = app.add_subcommand("search", "Search for a proof of a term");
  search_cmd->add_option("term", term_text)->required();

  CLI11_PARSE(app, argc, argv);

  std::cout << cfg.describe() << "\n";
  try {
    if (parse_cmd->parsed()) return cmd_parse(term_text);
    if (eval_cmd->parsed()) return cmd_eval(cfg, term_text);
    if (translate_cmd->parsed()) return cmd_translate(term_text);
    if (taut_cmd->parsed()) return cmd_taut(cfg, term_text);
    if (suite_cmd->parsed()) {
      if (cfg.suite.empty()) throw CliError("suite needs --suite ID");
      return cmd_suite(cfg);
    }
    if (check_cmd->parsed()) return cmd_check(cfg, path);
    if (search_cmd->parsed()) return cmd_search(cfg, term_text);
  } catch (const CliError& e) {
    std::cout << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
