// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poincare/algebra/suites.hpp"
#include "poincare/calculus/schema.hpp"
#include "poincare/models/square.hpp"
#include "poincare/term/eval.hpp"
#include "poincare/term/random.hpp"
#include "poincare/term/syntax.hpp"

namespace poincare {

/// e(x_i) = (v(x_i), v(sqrt x_i)) for every atom assigned by v.
template <class S>
Interpretation<Pair<S>> lift_valuation(const FragmentValuation<S>& v) {
  Interpretation<Pair<S>> e;
  for (const auto& [i, value] : v.vars) {
    const auto root = v.roots.find(i);
    if (root == v.roots.end()) throw UnassignedVariable("unassigned atom sqrt(x" + std::to_string(i) + ")");
    e.emplace(i, Pair<S>{value, root->second});
  }
  for (const auto& [i, value] : v.roots)
    if (!v.vars.count(i)) throw UnassignedVariable("unassigned atom x" + std::to_string(i));
  return e;
}

/// "x1=<elem> x2=<elem>" in variable order.
template <Model M>
std::string render_interpretation(const M& m, const Interpretation<ElementOf<M>>& e) {
  std::string out;
  for (const auto& [i, value] : e) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(i) + "=" + m.render(value);
  }
  return out;
}

struct TautologyConfig {
  /// Enumerate m.elements() per variable, first variable most significant.
  bool grid = true;
  /// Grid enumeration stops after this many assignments.
  std::size_t grid_limit = 1'000'000;
  /// Seeded random assignments tried after the grid.
  std::size_t random = 0;
  std::uint64_t seed = 0;
};

template <class E>
struct TautologyResult {
  std::optional<Interpretation<E>> counterexample;
  std::size_t checked = 0;
};

/// First assignment with evaluate_prob(t) != one, grid points before random samples.
template <Model M>
TautologyResult<ElementOf<M>> tautology_search(const Term& t, const M& m, const TautologyConfig& cfg) {
  using E = ElementOf<M>;
  TautologyResult<E> result;
  const auto vars = variables(t);
  const std::vector<unsigned> order(vars.begin(), vars.end());
  auto fails = [&](const Interpretation<E>& e) {
    ++result.checked;
    if (evaluate_prob(t, m, e) == m.one()) return false;
    result.counterexample = e;
    return true;
  };
  if (cfg.grid) {
    const auto elems = m.elements();
    if (!elems.empty() || order.empty()) {
      std::vector<std::size_t> digits(order.size(), 0);
      while (result.checked < cfg.grid_limit) {
        Interpretation<E> e;
        for (std::size_t k = 0; k < order.size(); ++k) e.emplace(order[k], elems[digits[k]]);
        if (fails(e)) return result;
        std::size_t k = order.size();
        while (k > 0 && ++digits[k - 1] == elems.size()) digits[--k] = 0;
        if (k == 0) break;
      }
    }
  }
  Rng rng(cfg.seed);
  for (std::size_t r = 0; r < cfg.random; ++r) {
    Interpretation<E> e;
    for (unsigned v : order) e.emplace(v, m.sample(rng));
    if (fails(e)) return result;
  }
  return result;
}

struct SoundnessConfig {
  std::size_t instances = 50;
  std::size_t interpretations = 200;
  unsigned max_depth = 4;
  unsigned vars = 3;
  std::uint64_t seed = 0;
  std::size_t mp_triples = 500;
  std::size_t mp_attempts = 200'000;
  std::vector<Dyadic> witnesses = default_ip_witnesses();
};

/// Random instances of one schema evaluated under random interpretations.
template <Model M>
AxiomReport schema_soundness(SchemaId id, const M& m, const SoundnessConfig& cfg) {
  AxiomReport report{schema_name(id)};
  Rng rng(cfg.seed + static_cast<std::uint64_t>(id) + 1);
  for (std::size_t n = 0; n < cfg.instances; ++n) {
    const Term instance = random_instance(id, rng, cfg.max_depth, cfg.vars, cfg.witnesses);
    TautologyConfig taut{false, 0, cfg.interpretations, rng()};
    const auto r = tautology_search(instance, m, taut);
    report.checked += r.checked;
    if (r.counterexample && report.violations.size() < 16)
      report.violations.push_back(print(instance) + " at " + render_interpretation(m, *r.counterexample));
  }
  return report;
}

/// Elements used for MP triples: the constants and, with sqrt, their roots.
template <Model M>
std::vector<ElementOf<M>> coarse_elements(const M& m) {
  std::vector<ElementOf<M>> out{m.zero(), m.half(), m.one()};
  if constexpr (SqrtModel<M>) {
    for (std::size_t k = 0; k < 3; ++k) out.push_back(m.sqrt_op(out[k]));
  }
  return out;
}

/// For sampled (alpha, beta, e) with e_p(alpha) = 1 and e_p(alpha -> beta) = 1,
/// checks e_p(beta) = 1. Fails if fewer than cfg.mp_triples triples are found.
template <Model M>
AxiomReport mp_preservation(const M& m, const SoundnessConfig& cfg) {
  using E = ElementOf<M>;
  AxiomReport report{"MP"};
  Rng rng(cfg.seed);
  const auto pool = coarse_elements(m);
  const TermShape shape{3, 2, SqrtModel<M>};
  std::size_t attempts = 0;
  while (report.checked < cfg.mp_triples && attempts < cfg.mp_attempts) {
    ++attempts;
    const Term alpha = random_term(rng, shape);
    const Term beta = random_term(rng, shape);
    Interpretation<E> e;
    for (unsigned v = 1; v <= shape.vars; ++v)
      e.emplace(v, pool[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(pool.size()) - 1))]);
    if (evaluate_prob(alpha, m, e) != m.one()) continue;
    if (evaluate_prob(t_imp(alpha, beta), m, e) != m.one()) continue;
    ++report.checked;
    if (evaluate_prob(beta, m, e) != m.one() && report.violations.size() < 16)
      report.violations.push_back(print(alpha) + " ; " + print(beta) + " at " + render_interpretation(m, e));
  }
  if (report.checked < cfg.mp_triples)
    report.violations.push_back("only " + std::to_string(report.checked) + " triples in " + std::to_string(attempts) +
                                " attempts");
  return report;
}

/// One report per schema, then the MP report.
template <Model M>
std::vector<AxiomReport> soundness_suite(const std::vector<SchemaId>& schemas, const M& m, const SoundnessConfig& cfg) {
  std::vector<AxiomReport> out;
  for (auto id : schemas) out.push_back(schema_soundness(id, m, cfg));
  out.push_back(mp_preservation(m, cfg));
  return out;
}

}  // namespace poincare
