// SPDX-License-Identifier: Apache-2.0
#include "poincare/models/bloch.hpp"

#include <string>

namespace poincare {

namespace {

bool valid_norm(const Rational& r1, const Rational& r2, const Rational& r3) {
  return r1 * r1 + r2 * r2 + r3 * r3 <= Rational(1);
}

Rational sample_coordinate(Rng& rng, long den) { return Rational(uniform_int(rng, -den, den), den); }

}  // namespace

BlochState::BlochState(Rational r1, Rational r2, Rational r3)
    : r1_(std::move(r1)), r2_(std::move(r2)), r3_(std::move(r3)) {
  if (!valid_norm(r1_, r2_, r3_)) throw InvalidState("Bloch vector outside the unit ball: " + str());
}

std::string BlochState::str() const { return "(" + r1_.str() + "," + r2_.str() + "," + r3_.str() + ")"; }

BlochState bloch_rho(const Rational& lambda) { return {Rational(0), Rational(0), Rational(1) - Rational(2) * lambda}; }

Rational bloch_prob(const BlochState& s) { return (Rational(1) - s.r3()) / Rational(2); }

BlochState bloch_oplus(const BlochState& s, const BlochState& t) {
  return bloch_rho(min(Rational(1), bloch_prob(s) + bloch_prob(t)));
}

BlochState bloch_bullet(const BlochState& s, const BlochState& t) { return bloch_rho(bloch_prob(s) * bloch_prob(t)); }

BlochState bloch_neg(const BlochState& s) { return {s.r1(), -s.r2(), -s.r3()}; }

BlochState bloch_sqrt(const BlochState& s) { return {s.r1(), -s.r3(), s.r2()}; }

BlochConstants bloch_consts() {
  return {BlochState(Rational(0), Rational(0), Rational(1)), BlochState(), BlochState(Rational(0), Rational(0), Rational(-1))};
}

BlochState yz_project(const BlochState& s) { return {Rational(0), s.r2(), s.r3()}; }

Pair<Rational> phi(const BlochState& s) {
  if (!s.r1().is_zero()) throw std::domain_error("phi requires r1 = 0: " + s.str());
  return {(Rational(1) - s.r3()) / Rational(2), (Rational(1) - s.r2()) / Rational(2)};
}

BlochState phi_inv(const Pair<Rational>& p) {
  if (!disk_contains(p.a, p.b)) throw std::domain_error("phi_inv requires a disk point");
  return {Rational(0), Rational(1) - Rational(2) * p.b, Rational(1) - Rational(2) * p.a};
}

BlochState BlochModel::parse(std::string_view text) const {
  const auto parts = split_tuple(text, 3);
  Rational r[3];
  try {
    for (int i = 0; i < 3; ++i) r[i] = Rational::parse(parts[i]);
  } catch (const std::exception&) {
    throw InvalidElement("invalid element: '" + std::string(text) + "'");
  }
  if (!valid_norm(r[0], r[1], r[2])) throw InvalidElement("element outside the Bloch ball: '" + std::string(text) + "'");
  return {r[0], r[1], r[2]};
}

std::vector<BlochState> BlochModel::elements() const {
  std::vector<BlochState> out;
  if (grid_ == 0) return out;
  std::vector<Rational> coords;
  const long g = static_cast<long>(grid_);
  for (long k = 0; k <= g; ++k) coords.push_back(Rational(2 * k - g, g));
  for (const auto& a : coords)
    for (const auto& b : coords)
      for (const auto& c : coords)
        if (valid_norm(a, b, c)) out.emplace_back(a, b, c);
  return out;
}

BlochState BlochModel::sample(Rng& rng) const {
  while (true) {
    const long den = uniform_int(rng, 1, sample_den_);
    Rational a = sample_coordinate(rng, den);
    Rational b = sample_coordinate(rng, den);
    Rational c = sample_coordinate(rng, den);
    if (valid_norm(a, b, c)) return {a, b, c};
  }
}

BlochState BlochModel::sample_slice(Rng& rng) const {
  while (true) {
    const long den = uniform_int(rng, 1, sample_den_);
    Rational b = sample_coordinate(rng, den);
    Rational c = sample_coordinate(rng, den);
    if (valid_norm(Rational(0), b, c)) return {Rational(0), b, c};
  }
}

}  // namespace poincare
