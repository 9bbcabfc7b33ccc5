// SPDX-License-Identifier: Apache-2.0
#include "poincare/models/scalar.hpp"

#include <random>
#include <string>

namespace poincare {

Rational ScalarOps<Rational>::from_rational(const Rational& r, std::string_view text) {
  if (r.sign() < 0 || r > Rational(1)) throw InvalidElement("value outside [0,1]: '" + std::string(text) + "'");
  return r;
}

Dyadic ScalarOps<Dyadic>::from_rational(const Rational& r, std::string_view text) {
  const auto d = Dyadic::from_rational(r);
  if (!d) throw InvalidElement("not a dyadic in [0,1]: '" + std::string(text) + "'");
  return *d;
}

long uniform_int(Rng& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(rng);
}

Rational sample_unit_rational(Rng& rng, long max_den) {
  const long den = uniform_int(rng, 1, max_den);
  return Rational(uniform_int(rng, 0, den), den);
}

}  // namespace poincare
