// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poincare/algebra/signature.hpp"
#include "poincare/exact/qsqrt2.hpp"
#include "poincare/models/scalar.hpp"

namespace poincare {

/// Element (a, b) of a square construction over a PMV(1/2) carrier.
template <class S>
struct Pair {
  S a;
  S b;
  friend bool operator==(const Pair&, const Pair&) = default;
};

/// (1/4 . x) (+) (1/4 . y) evaluated in the rational interval.
Rational quarter_sum(const Rational& x, const Rational& y);

/// Whether quarter_sum(x, y) <= theta().
bool below_threshold(const Rational& x, const Rational& y);

/// (x - 1/2)^2 + (y - 1/2)^2 <= 1/4.
bool disk_contains(const Rational& x, const Rational& y);

/// Union of the four quadrant conditions; a component equal to 1/2 may use
/// either adjacent quadrant.
bool octagon_contains(const Rational& x, const Rational& y);

template <class S>
bool disk_contains(const Pair<S>& p) {
  return disk_contains(ScalarOps<S>::to_rational(p.a), ScalarOps<S>::to_rational(p.b));
}

template <class S>
bool octagon_contains(const Pair<S>& p) {
  return octagon_contains(ScalarOps<S>::to_rational(p.a), ScalarOps<S>::to_rational(p.b));
}

enum class Region { full, disk, octagon };

std::string region_name(Region r);

/// S_A over carrier S restricted to a region closed under the operations.
template <class S>
class SquareModel {
 public:
  using Element = Pair<S>;

  SquareModel(std::string name, Region region, std::vector<S> carrier, long sample_den)
      : name_(std::move(name)), region_(region), carrier_(std::move(carrier)), sample_den_(sample_den) {}

  std::string name() const { return name_; }
  Region region() const { return region_; }

  Element oplus(const Element& x, const Element& y) const { return {Ops::oplus(x.a, y.a), Ops::half()}; }
  Element bullet(const Element& x, const Element& y) const { return {Ops::bullet(x.a, y.a), Ops::half()}; }
  Element neg(const Element& x) const { return {Ops::neg(x.a), Ops::neg(x.b)}; }
  Element sqrt_op(const Element& x) const { return {x.b, Ops::neg(x.a)}; }
  Element zero() const { return {Ops::zero(), Ops::half()}; }
  Element half() const { return {Ops::half(), Ops::half()}; }
  Element one() const { return {Ops::one(), Ops::half()}; }

  bool contains(const Element& x) const;
  std::string render(const Element& x) const {
    return "(" + Ops::to_rational(x.a).str() + "," + Ops::to_rational(x.b).str() + ")";
  }
  Element parse(std::string_view text) const;
  Rational probability(const Element& x) const { return Ops::to_rational(x.a); }
  std::vector<Element> elements() const;
  Element sample(Rng& rng) const;

 private:
  using Ops = ScalarOps<S>;
  std::string name_;
  Region region_;
  std::vector<S> carrier_;
  long sample_den_;
};

using SquareDyadic = SquareModel<Dyadic>;
using SquareRational = SquareModel<Rational>;

/// S_A over the dyadic slice 2^denom.
SquareDyadic make_square(unsigned long denom);
/// Octagon D_A over the dyadic slice 2^denom.
SquareDyadic make_octagon(unsigned long denom);
/// Disk over the rationals; grid points k/grid, samples with denominators up to 64.
SquareRational make_disk(unsigned long grid);

/// Splits "(u,v,...)" into trimmed components; throws InvalidElement.
std::vector<std::string> split_tuple(std::string_view text, std::size_t arity);

}  // namespace poincare
