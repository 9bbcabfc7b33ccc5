// SPDX-License-Identifier: Apache-2.0
#include "poincare/models/density.hpp"

namespace poincare {

Dyadic find_dyadic_between(const Rational& a, const Rational& b) {
  if (a >= b) throw EmptyInterval("empty interval: " + a.str() + " >= " + b.str());
  if (a.sign() < 0 || b > Rational(1)) throw std::domain_error("interval must lie in [0,1]");
  for (unsigned long n = 0;; ++n) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, n);
    const mpq_class scaled = a.raw() * scale;
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    k += 1;
    if (Rational(k, scale) < b) return Dyadic(k, n);
  }
}

}  // namespace poincare
