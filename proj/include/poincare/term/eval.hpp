// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "poincare/algebra/signature.hpp"
#include "poincare/term/syntax.hpp"
#include "poincare/term/term.hpp"

namespace poincare {

struct UnassignedVariable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Variable index -> model element.
template <class E>
using Interpretation = std::map<unsigned, E>;

/// Valuation of the fragment: values for x_i and, separately, for the atoms sqrt(x_i).
template <class E>
struct FragmentValuation {
  std::map<unsigned, E> vars;
  std::map<unsigned, E> roots;
};

template <Model M>
ElementOf<M> evaluate(const Term& t, const M& m, const Interpretation<ElementOf<M>>& interp) {
  switch (t.kind()) {
    case Kind::var: {
      const auto it = interp.find(t.index());
      if (it == interp.end()) throw UnassignedVariable("unassigned variable x" + std::to_string(t.index()));
      return it->second;
    }
    case Kind::constant:
      return t.constant() == Const::zero ? m.zero() : (t.constant() == Const::half ? m.half() : m.one());
    case Kind::neg:
      return m.neg(evaluate(t.arg(), m, interp));
    case Kind::sqrt:
      if constexpr (SqrtModel<M>) {
        return m.sqrt_op(evaluate(t.arg(), m, interp));
      } else {
        throw std::invalid_argument("model " + std::string(m.name()) + " has no sqrt");
      }
    case Kind::oplus:
      return m.oplus(evaluate(t.left(), m, interp), evaluate(t.right(), m, interp));
    case Kind::bullet:
      return m.bullet(evaluate(t.left(), m, interp), evaluate(t.right(), m, interp));
  }
  throw std::logic_error("unknown term kind");
}

template <Model M>
ElementOf<M> evaluate_prob(const Term& t, const M& m, const Interpretation<ElementOf<M>>& interp) {
  return prob(m, evaluate(t, m, interp));
}

/// Evaluation of a fragment term with the sqrt(x_i) treated as opaque atoms.
template <Model M>
ElementOf<M> fragment_eval(const Term& t, const M& m, const FragmentValuation<ElementOf<M>>& v) {
  switch (t.kind()) {
    case Kind::var: {
      const auto it = v.vars.find(t.index());
      if (it == v.vars.end()) throw UnassignedVariable("unassigned atom x" + std::to_string(t.index()));
      return it->second;
    }
    case Kind::sqrt: {
      if (!t.arg().is(Kind::var)) throw std::invalid_argument("not a fragment term: " + print(t));
      const auto it = v.roots.find(t.arg().index());
      if (it == v.roots.end()) throw UnassignedVariable("unassigned atom sqrt(x" + std::to_string(t.arg().index()) + ")");
      return it->second;
    }
    case Kind::constant:
      return t.constant() == Const::zero ? m.zero() : (t.constant() == Const::half ? m.half() : m.one());
    case Kind::neg:
      return m.neg(fragment_eval(t.arg(), m, v));
    case Kind::oplus:
      return m.oplus(fragment_eval(t.left(), m, v), fragment_eval(t.right(), m, v));
    case Kind::bullet:
      return m.bullet(fragment_eval(t.left(), m, v), fragment_eval(t.right(), m, v));
  }
  throw std::logic_error("unknown term kind");
}

}  // namespace poincare
