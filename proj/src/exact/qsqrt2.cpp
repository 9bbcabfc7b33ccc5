// SPDX-License-Identifier: Apache-2.0
#include "poincare/exact/qsqrt2.hpp"

#include <stdexcept>
#include <string>

namespace poincare {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Parses "q*sqrt2", "sqrt2" or "-sqrt2" into q; returns false if the suffix is absent.
bool parse_irrational(std::string_view s, Rational& q) {
  constexpr std::string_view kRoot = "sqrt2";
  if (s.size() < kRoot.size() || s.substr(s.size() - kRoot.size()) != kRoot) return false;
  s = trim(s.substr(0, s.size() - kRoot.size()));
  if (s.empty() || s == "+") {
    q = Rational(1);
  } else if (s == "-") {
    q = Rational(-1);
  } else {
    if (s.back() != '*') throw std::invalid_argument("invalid QSqrt2");
    q = Rational::parse(trim(s.substr(0, s.size() - 1)));
  }
  return true;
}

}  // namespace

int QSqrt2::sign() const {
  const int sp = p_.sign();
  const int sq = q_.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: the component with the larger square wins.
  const Rational lhs = p_ * p_;
  const Rational rhs = Rational(2) * q_ * q_;
  return lhs > rhs ? sp : sq;
}

std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering qsqrt2_cmp(const QSqrt2& x, const QSqrt2& y) { return x <=> y; }

QSqrt2 theta() { return {Rational(1, 4), Rational(1, 8)}; }

QSqrt2 QSqrt2::parse(std::string_view text) {
  const std::string_view s = trim(text);
  // Split at the last top-level '+' or '-' that separates the two parts.
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] == ' ') {
      Rational q;
      try {
        if (!parse_irrational(trim(s.substr(i + 1)), q)) break;
        Rational p = Rational::parse(trim(s.substr(0, i)));
        return {p, s[i] == '-' ? -q : q};
      } catch (const std::invalid_argument&) {
        continue;
      }
    }
  }
  Rational q;
  if (parse_irrational(s, q)) return {Rational(0), q};
  return {Rational::parse(s), Rational(0)};
}

std::string QSqrt2::str() const {
  if (q_.sign() < 0) return p_.str() + " - " + (-q_).str() + "*sqrt2";
  return p_.str() + " + " + q_.str() + "*sqrt2";
}

}  // namespace poincare
