// SPDX-License-Identifier: Apache-2.0
#include "poincare/term/fraction.hpp"

#include <string>

#include "poincare/term/syntax.hpp"

namespace poincare {

namespace {

Term unit_term(unsigned long n) {
  Term t = Term::half();
  for (unsigned long k = 1; k < n; ++k) t = Term::bullet(t, Term::half());
  return t;
}

// Exponent n when t is the canonical 1/2^n.
std::optional<unsigned long> unit_exponent(const Term& t) {
  unsigned long n = 1;
  const Term* cur = &t;
  while (cur->is(Kind::bullet)) {
    if (!cur->right().is(Kind::constant) || cur->right().constant() != Const::half) return std::nullopt;
    ++n;
    cur = &cur->left();
  }
  if (!cur->is(Kind::constant) || cur->constant() != Const::half) return std::nullopt;
  return n;
}

}  // namespace

Term frac_term(const FracSpec& spec) {
  if (spec.n >= 64 || spec.a > (1UL << spec.n)) throw std::invalid_argument("fraction numerator exceeds 2^n");
  if (spec.a == 0) return Term::zero();
  if (spec.n == 0) return Term::one();
  const Term unit = unit_term(spec.n);
  Term t = unit;
  for (unsigned long k = 1; k < spec.a; ++k) t = Term::oplus(t, unit);
  return t;
}

std::optional<FracSpec> recognize_frac(const Term& t) {
  if (t.is(Kind::constant)) {
    if (t.constant() == Const::zero) return FracSpec{0, 0};
    if (t.constant() == Const::one) return FracSpec{1, 0};
  }
  unsigned long count = 1;
  const Term* cur = &t;
  std::optional<unsigned long> n;
  while (cur->is(Kind::oplus)) {
    const auto e = unit_exponent(cur->right());
    if (!e || (n && *n != *e)) return std::nullopt;
    n = e;
    ++count;
    cur = &cur->left();
  }
  const auto e = unit_exponent(*cur);
  if (!e || (n && *n != *e)) return std::nullopt;
  if (*e >= 64 || count > (1UL << *e)) return std::nullopt;
  return FracSpec{count, *e};
}

Term quarter_term() { return frac_term({1, 2}); }

Dyadic const_eval(const Term& t) {
  switch (t.kind()) {
    case Kind::var:
    case Kind::sqrt:
      throw NotClosed("term is not closed: " + print(t));
    case Kind::constant:
      return t.constant() == Const::zero ? Dyadic::zero() : (t.constant() == Const::half ? Dyadic::half() : Dyadic::one());
    case Kind::neg:
      return dyadic_neg(const_eval(t.arg()));
    case Kind::oplus:
      return dyadic_oplus(const_eval(t.left()), const_eval(t.right()));
    case Kind::bullet:
      return dyadic_bullet(const_eval(t.left()), const_eval(t.right()));
  }
  throw NotClosed("unknown term");
}

std::optional<Dyadic> try_const_eval(const Term& t) {
  if (!is_closed(t)) return std::nullopt;
  return const_eval(t);
}

}  // namespace poincare
