// SPDX-License-Identifier: Apache-2.0
#include "poincare/models/chain.hpp"

#include <string>

namespace poincare {

namespace {

Rational parse_scalar(std::string_view text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw InvalidElement("invalid element: '" + std::string(text) + "'");
  } catch (const std::domain_error&) {
    throw InvalidElement("invalid element: '" + std::string(text) + "'");
  }
}

}  // namespace

template <class S>
S ChainModel<S>::parse(std::string_view text) const {
  return ScalarOps<S>::from_rational(parse_scalar(text), text);
}

template class ChainModel<Rational>;
template class ChainModel<Dyadic>;

std::vector<Rational> rational_grid(unsigned long grid) {
  std::vector<Rational> out;
  if (grid == 0) return out;
  for (unsigned long k = 0; k <= grid; ++k) out.emplace_back(static_cast<long>(k), static_cast<long>(grid));
  return out;
}

IntervalModel make_interval(unsigned long grid) { return IntervalModel("interval", rational_grid(grid), 64); }

DyadicModel make_dyadic_chain(unsigned long denom) {
  return DyadicModel("dyadic", dyadic_slice(denom), static_cast<long>(denom));
}

}  // namespace poincare
