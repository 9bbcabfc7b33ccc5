// SPDX-License-Identifier: Apache-2.0
#include "poincare/exact/dyadic.hpp"

#include <stdexcept>
#include <string>

namespace poincare {

namespace {

mpz_class pow2(unsigned long n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

Dyadic from_exact(const Rational& r) {
  auto d = Dyadic::from_rational(r);
  if (!d) throw std::logic_error("dyadic arithmetic left [0,1]");
  return *d;
}

}  // namespace

Dyadic::Dyadic(const mpz_class& a, unsigned long n) : a_(a), n_(n) {
  if (a_ < 0 || a_ > pow2(n_)) throw std::domain_error("dyadic numerator out of range");
  if (a_ == 0) {
    n_ = 0;
    return;
  }
  const unsigned long tz = mpz_scan1(a_.get_mpz_t(), 0);
  const unsigned long k = tz < n_ ? tz : n_;
  a_ >>= k;
  n_ -= k;
}

std::optional<Dyadic> Dyadic::from_rational(const Rational& r) {
  if (r.sign() < 0 || r > Rational(1)) return std::nullopt;
  const mpz_class den = r.denominator();
  if (mpz_popcount(den.get_mpz_t()) != 1) return std::nullopt;
  return Dyadic(r.numerator(), mpz_scan1(den.get_mpz_t(), 0));
}

Dyadic Dyadic::parse(std::string_view text) {
  const auto d = from_rational(Rational::parse(text));
  if (!d) throw std::invalid_argument("not a dyadic in [0,1]: '" + std::string(text) + "'");
  return *d;
}

Rational Dyadic::to_rational() const { return Rational(a_, pow2(n_)); }

std::string Dyadic::str() const {
  if (n_ == 0) return a_.get_str();
  return a_.get_str() + "/2^" + std::to_string(n_);
}

Dyadic dyadic_oplus(const Dyadic& x, const Dyadic& y) {
  return from_exact(min(Rational(1), x.to_rational() + y.to_rational()));
}

Dyadic dyadic_neg(const Dyadic& x) { return Dyadic(pow2(x.n()) - x.a(), x.n()); }

Dyadic dyadic_bullet(const Dyadic& x, const Dyadic& y) { return Dyadic(x.a() * y.a(), x.n() + y.n()); }

Dyadic dyadic_odot(const Dyadic& x, const Dyadic& y) {
  return from_exact(max(Rational(0), x.to_rational() + y.to_rational() - Rational(1)));
}

std::optional<mpz_class> nilpotency_index(const Dyadic& x) {
  if (x.is_one()) return std::nullopt;
  // k-fold power is max(0, k*a - (k-1)*2^n)/2^n, zero once k*(2^n - a) >= 2^n.
  const mpz_class top = pow2(x.n());
  const mpz_class gap = top - x.a();
  mpz_class k;
  mpz_cdiv_q(k.get_mpz_t(), top.get_mpz_t(), gap.get_mpz_t());
  return k;
}

std::vector<Dyadic> dyadic_slice(unsigned long n) {
  std::vector<Dyadic> out;
  const mpz_class top = pow2(n);
  for (mpz_class a = 0; a <= top; ++a) out.emplace_back(a, n);
  return out;
}

}  // namespace poincare
