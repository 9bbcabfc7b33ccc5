// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <concepts>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/exact/rational.hpp"

namespace poincare {

using Rng = std::mt19937_64;

/// A model of <oplus, bullet, neg, 0, 1/2, 1> with exact equality, a finite
/// enumerable slice and a seeded sampler.
template <class M>
concept Model = requires(const M& m, const typename M::Element& a, Rng& rng, std::string_view text) {
  { m.name() } -> std::convertible_to<std::string>;
  { m.oplus(a, a) } -> std::same_as<typename M::Element>;
  { m.bullet(a, a) } -> std::same_as<typename M::Element>;
  { m.neg(a) } -> std::same_as<typename M::Element>;
  { m.zero() } -> std::same_as<typename M::Element>;
  { m.half() } -> std::same_as<typename M::Element>;
  { m.one() } -> std::same_as<typename M::Element>;
  { m.render(a) } -> std::same_as<std::string>;
  { m.parse(text) } -> std::same_as<typename M::Element>;
  { m.probability(a) } -> std::same_as<Rational>;
  { m.elements() } -> std::same_as<std::vector<typename M::Element>>;
  { m.sample(rng) } -> std::same_as<typename M::Element>;
  { a == a } -> std::convertible_to<bool>;
};

template <class M>
concept SqrtModel = Model<M> && requires(const M& m, const typename M::Element& a) {
  { m.sqrt_op(a) } -> std::same_as<typename M::Element>;
};

/// Element text rejected by a model's parser (bad syntax or outside the carrier).
struct InvalidElement : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <Model M>
using ElementOf = typename M::Element;

template <Model M>
ElementOf<M> odot(const M& m, const ElementOf<M>& a, const ElementOf<M>& b) {
  return m.neg(m.oplus(m.neg(a), m.neg(b)));
}

template <Model M>
ElementOf<M> imp(const M& m, const ElementOf<M>& a, const ElementOf<M>& b) {
  return m.oplus(m.neg(a), b);
}

template <Model M>
ElementOf<M> meet(const M& m, const ElementOf<M>& a, const ElementOf<M>& b) {
  return odot(m, a, imp(m, a, b));
}

template <Model M>
ElementOf<M> join(const M& m, const ElementOf<M>& a, const ElementOf<M>& b) {
  return imp(m, imp(m, a, b), b);
}

template <Model M>
ElementOf<M> iff_op(const M& m, const ElementOf<M>& a, const ElementOf<M>& b) {
  return odot(m, imp(m, a, b), imp(m, b, a));
}

template <Model M>
bool leq(const M& m, const ElementOf<M>& a, const ElementOf<M>& b) {
  return imp(m, a, b) == m.one();
}

template <Model M>
bool equiv(const M& m, const ElementOf<M>& a, const ElementOf<M>& b) {
  return leq(m, a, b) && leq(m, b, a);
}

template <Model M>
ElementOf<M> prob(const M& m, const ElementOf<M>& a) {
  return m.oplus(a, m.zero());
}

/// Model element denoted by the canonical fraction term a/2^n.
template <Model M>
ElementOf<M> frac_element(const M& m, unsigned long a, unsigned long n) {
  if (a == 0) return m.zero();
  if (n == 0) return m.one();
  ElementOf<M> unit = m.half();
  for (unsigned long k = 1; k < n; ++k) unit = m.bullet(unit, m.half());
  ElementOf<M> acc = unit;
  for (unsigned long k = 1; k < a; ++k) acc = m.oplus(acc, unit);
  return acc;
}

}  // namespace poincare
