// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "poincare/exact/rational.hpp"

namespace poincare {

/// Exact element p + q*sqrt(2) of Q(sqrt 2).
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rational p) : p_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

  /// Accepts "p", "q*sqrt2", "p + q*sqrt2" and "p - q*sqrt2".
  static QSqrt2 parse(std::string_view text);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }

  int sign() const;

  QSqrt2 operator-() const { return {-p_, -q_}; }
  friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.p_ + y.p_, x.q_ + y.q_}; }
  friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return {x.p_ - y.p_, x.q_ - y.q_}; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
    return {x.p_ * y.p_ + Rational(2) * x.q_ * y.q_, x.p_ * y.q_ + x.q_ * y.p_};
  }

  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.p_ == y.p_ && x.q_ == y.q_; }
  friend std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y);

  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << x.str(); }

 private:
  Rational p_;
  Rational q_;
};

std::strong_ordering qsqrt2_cmp(const QSqrt2& x, const QSqrt2& y);

/// (1 + sqrt2) / (4 sqrt2) = 1/4 + (1/8) sqrt2.
QSqrt2 theta();

}  // namespace poincare
