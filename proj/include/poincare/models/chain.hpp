// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "poincare/algebra/signature.hpp"
#include "poincare/models/scalar.hpp"

namespace poincare {

/// Linearly ordered PMV(1/2)-algebra: the rational unit interval or the dyadic chain.
/// No sqrt operation.
template <class S>
class ChainModel {
 public:
  using Element = S;

  /// `carrier` is the finite slice used for exhaustive runs; `sample_den`
  /// bounds sampled denominators (rational) or fixes the exponent (dyadic).
  ChainModel(std::string name, std::vector<S> carrier, long sample_den)
      : name_(std::move(name)), carrier_(std::move(carrier)), sample_den_(sample_den) {}

  std::string name() const { return name_; }
  S oplus(const S& x, const S& y) const { return ScalarOps<S>::oplus(x, y); }
  S bullet(const S& x, const S& y) const { return ScalarOps<S>::bullet(x, y); }
  S neg(const S& x) const { return ScalarOps<S>::neg(x); }
  S zero() const { return ScalarOps<S>::zero(); }
  S half() const { return ScalarOps<S>::half(); }
  S one() const { return ScalarOps<S>::one(); }
  std::string render(const S& x) const { return ScalarOps<S>::to_rational(x).str(); }
  S parse(std::string_view text) const;
  Rational probability(const S& x) const { return ScalarOps<S>::to_rational(x); }
  std::vector<S> elements() const { return carrier_; }
  S sample(Rng& rng) const {
    if constexpr (std::is_same_v<S, Dyadic>) {
      return Dyadic(uniform_int(rng, 0, 1L << sample_den_), static_cast<unsigned long>(sample_den_));
    } else {
      return sample_unit_rational(rng, sample_den_);
    }
  }

 private:
  std::string name_;
  std::vector<S> carrier_;
  long sample_den_;
};

using IntervalModel = ChainModel<Rational>;
using DyadicModel = ChainModel<Dyadic>;

/// k/grid for k = 0..grid.
std::vector<Rational> rational_grid(unsigned long grid);

IntervalModel make_interval(unsigned long grid);
DyadicModel make_dyadic_chain(unsigned long denom);

}  // namespace poincare
