// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "poincare/algebra/signature.hpp"
#include "poincare/exact/dyadic.hpp"
#include "poincare/exact/rational.hpp"

namespace poincare {

/// PMV(1/2) arithmetic on a scalar carrier in [0,1].
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational half() { return Rational(1, 2); }
  static Rational one() { return Rational(1); }
  static Rational oplus(const Rational& x, const Rational& y) { return min(Rational(1), x + y); }
  static Rational bullet(const Rational& x, const Rational& y) { return x * y; }
  static Rational neg(const Rational& x) { return Rational(1) - x; }
  static Rational to_rational(const Rational& x) { return x; }
  static Rational from_rational(const Rational& r, std::string_view text);
};

template <>
struct ScalarOps<Dyadic> {
  static Dyadic zero() { return Dyadic::zero(); }
  static Dyadic half() { return Dyadic::half(); }
  static Dyadic one() { return Dyadic::one(); }
  static Dyadic oplus(const Dyadic& x, const Dyadic& y) { return dyadic_oplus(x, y); }
  static Dyadic bullet(const Dyadic& x, const Dyadic& y) { return dyadic_bullet(x, y); }
  static Dyadic neg(const Dyadic& x) { return dyadic_neg(x); }
  static Rational to_rational(const Dyadic& x) { return x.to_rational(); }
  static Dyadic from_rational(const Rational& r, std::string_view text);
};

/// Uniform integer in [lo, hi].
long uniform_int(Rng& rng, long lo, long hi);

/// Random rational k/d in [0,1] with d drawn from [1, max_den].
Rational sample_unit_rational(Rng& rng, long max_den);

}  // namespace poincare
