// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "poincare/exact/rational.hpp"

namespace poincare {

/// Dyadic rational a/2^n in [0,1], kept canonical (a odd or n = 0).
class Dyadic {
 public:
  Dyadic() = default;
  /// Throws std::domain_error unless 0 <= a <= 2^n.
  Dyadic(const mpz_class& a, unsigned long n);

  static Dyadic zero() { return Dyadic(); }
  static Dyadic half() { return Dyadic(1, 1); }
  static Dyadic one() { return Dyadic(1, 0); }

  /// Converts an exact rational; none unless it is dyadic and in [0,1].
  static std::optional<Dyadic> from_rational(const Rational& r);
  /// Accepts the Rational syntax; throws std::invalid_argument if not a dyadic in [0,1].
  static Dyadic parse(std::string_view text);

  const mpz_class& a() const { return a_; }
  unsigned long n() const { return n_; }
  Rational to_rational() const;

  bool is_zero() const { return a_ == 0; }
  bool is_one() const { return n_ == 0 && a_ == 1; }

  friend bool operator==(const Dyadic& x, const Dyadic& y) { return x.n_ == y.n_ && x.a_ == y.a_; }
  friend std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y) {
    return x.to_rational() <=> y.to_rational();
  }

  /// "a/2^n", or "0" / "1" when n = 0.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

 private:
  mpz_class a_{0};
  unsigned long n_ = 0;
};

Dyadic dyadic_oplus(const Dyadic& x, const Dyadic& y);
Dyadic dyadic_neg(const Dyadic& x);
Dyadic dyadic_bullet(const Dyadic& x, const Dyadic& y);
Dyadic dyadic_odot(const Dyadic& x, const Dyadic& y);

/// Least k >= 1 with the k-fold odot power of x equal to 0; none for x = 1.
std::optional<mpz_class> nilpotency_index(const Dyadic& x);

/// Every value a/2^n for a = 0..2^n, increasing.
std::vector<Dyadic> dyadic_slice(unsigned long n);

}  // namespace poincare
