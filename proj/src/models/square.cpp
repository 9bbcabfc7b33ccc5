// SPDX-License-Identifier: Apache-2.0
#include "poincare/models/square.hpp"

#include <cctype>
#include <string>
#include <type_traits>

#include "poincare/models/chain.hpp"

namespace poincare {

Rational quarter_sum(const Rational& x, const Rational& y) {
  const Rational q(1, 4);
  return min(Rational(1), q * x + q * y);
}

bool below_threshold(const Rational& x, const Rational& y) {
  return qsqrt2_cmp(QSqrt2(quarter_sum(x, y)), theta()) != std::strong_ordering::greater;
}

bool disk_contains(const Rational& x, const Rational& y) {
  const Rational h(1, 2);
  const Rational dx = x - h;
  const Rational dy = y - h;
  return dx * dx + dy * dy <= Rational(1, 4);
}

bool octagon_contains(const Rational& x, const Rational& y) {
  const Rational h(1, 2);
  const Rational nx = Rational(1) - x;
  const Rational ny = Rational(1) - y;
  if (x >= h && y >= h && below_threshold(x, y)) return true;
  if (x <= h && y >= h && below_threshold(nx, y)) return true;
  if (x <= h && y <= h && below_threshold(nx, ny)) return true;
  if (x >= h && y <= h && below_threshold(x, ny)) return true;
  return false;
}

std::string region_name(Region r) {
  switch (r) {
    case Region::full:
      return "square";
    case Region::disk:
      return "disk";
    case Region::octagon:
      return "octagon";
  }
  return "?";
}

std::vector<std::string> split_tuple(std::string_view text, std::size_t arity) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw InvalidElement("invalid element: '" + std::string(text) + "'");
  std::vector<std::string> parts;
  std::string_view body = s.substr(1, s.size() - 2);
  while (true) {
    const auto comma = body.find(',');
    parts.emplace_back(trim(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (parts.size() != arity) throw InvalidElement("invalid element: '" + std::string(text) + "'");
  return parts;
}

template <class S>
bool SquareModel<S>::contains(const Element& x) const {
  switch (region_) {
    case Region::full:
      return true;
    case Region::disk:
      return disk_contains(x);
    case Region::octagon:
      return octagon_contains(x);
  }
  return false;
}

template <class S>
Pair<S> SquareModel<S>::parse(std::string_view text) const {
  const auto parts = split_tuple(text, 2);
  Rational a;
  Rational b;
  try {
    a = Rational::parse(parts[0]);
    b = Rational::parse(parts[1]);
  } catch (const std::exception&) {
    throw InvalidElement("invalid element: '" + std::string(text) + "'");
  }
  Element e{Ops::from_rational(a, text), Ops::from_rational(b, text)};
  if (!contains(e)) throw InvalidElement("element outside " + region_name(region_) + ": '" + std::string(text) + "'");
  return e;
}

template <class S>
std::vector<Pair<S>> SquareModel<S>::elements() const {
  std::vector<Element> out;
  for (const auto& a : carrier_) {
    for (const auto& b : carrier_) {
      Element e{a, b};
      if (contains(e)) out.push_back(e);
    }
  }
  return out;
}

template <class S>
Pair<S> SquareModel<S>::sample(Rng& rng) const {
  while (true) {
    Element e;
    if constexpr (std::is_same_v<S, Dyadic>) {
      const long top = 1L << sample_den_;
      const auto n = static_cast<unsigned long>(sample_den_);
      e = Element{Dyadic(uniform_int(rng, 0, top), n), Dyadic(uniform_int(rng, 0, top), n)};
    } else {
      e = Element{sample_unit_rational(rng, sample_den_), sample_unit_rational(rng, sample_den_)};
    }
    if (contains(e)) return e;
  }
}

template class SquareModel<Rational>;
template class SquareModel<Dyadic>;

SquareDyadic make_square(unsigned long denom) {
  return SquareDyadic("square", Region::full, dyadic_slice(denom), static_cast<long>(denom));
}

SquareDyadic make_octagon(unsigned long denom) {
  return SquareDyadic("octagon", Region::octagon, dyadic_slice(denom), static_cast<long>(denom));
}

SquareRational make_disk(unsigned long grid) {
  return SquareRational("disk", Region::disk, rational_grid(grid), 64);
}

}  // namespace poincare
