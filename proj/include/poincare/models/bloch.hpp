// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/algebra/signature.hpp"
#include "poincare/exact/rational.hpp"
#include "poincare/models/square.hpp"

namespace poincare {

struct InvalidState : std::domain_error {
  using std::domain_error::domain_error;
};

/// Exact Bloch coordinates of a qbit density operator; r1^2 + r2^2 + r3^2 <= 1.
class BlochState {
 public:
  BlochState() = default;
  BlochState(Rational r1, Rational r2, Rational r3);

  const Rational& r1() const { return r1_; }
  const Rational& r2() const { return r2_; }
  const Rational& r3() const { return r3_; }

  friend bool operator==(const BlochState&, const BlochState&) = default;

  /// "(r1,r2,r3)".
  std::string str() const;

 private:
  Rational r1_;
  Rational r2_;
  Rational r3_;
};

/// rho_lambda = (0, 0, 1 - 2 lambda).
BlochState bloch_rho(const Rational& lambda);
Rational bloch_prob(const BlochState& s);
BlochState bloch_oplus(const BlochState& s, const BlochState& t);
BlochState bloch_bullet(const BlochState& s, const BlochState& t);
BlochState bloch_neg(const BlochState& s);
BlochState bloch_sqrt(const BlochState& s);

struct BlochConstants {
  BlochState p0;
  BlochState half;
  BlochState p1;
};
BlochConstants bloch_consts();

/// (r1, r2, r3) -> (0, r2, r3).
BlochState yz_project(const BlochState& s);

/// Slice state (0, r2, r3) -> ((1 - r3)/2, (1 - r2)/2); std::domain_error if r1 != 0.
Pair<Rational> phi(const BlochState& s);
/// Disk point (a, b) -> (0, 1 - 2b, 1 - 2a); std::domain_error outside the disk.
BlochState phi_inv(const Pair<Rational>& p);

class BlochModel {
 public:
  using Element = BlochState;

  /// Grid points use coordinates -1 + 2k/grid; samples use denominators up to sample_den.
  BlochModel(unsigned long grid, long sample_den) : grid_(grid), sample_den_(sample_den) {}

  std::string name() const { return "bloch"; }
  BlochState oplus(const BlochState& x, const BlochState& y) const { return bloch_oplus(x, y); }
  BlochState bullet(const BlochState& x, const BlochState& y) const { return bloch_bullet(x, y); }
  BlochState neg(const BlochState& x) const { return bloch_neg(x); }
  BlochState sqrt_op(const BlochState& x) const { return bloch_sqrt(x); }
  BlochState zero() const { return bloch_consts().p0; }
  BlochState half() const { return bloch_consts().half; }
  BlochState one() const { return bloch_consts().p1; }
  std::string render(const BlochState& x) const { return x.str(); }
  BlochState parse(std::string_view text) const;
  Rational probability(const BlochState& x) const { return bloch_prob(x); }
  std::vector<BlochState> elements() const;
  BlochState sample(Rng& rng) const;
  /// Random state with r1 = 0.
  BlochState sample_slice(Rng& rng) const;

 private:
  unsigned long grid_;
  long sample_den_;
};

}  // namespace poincare
