// SPDX-License-Identifier: Apache-2.0
#include "poincare/term/term.hpp"

#include <algorithm>
#include <stdexcept>

#include "poincare/term/syntax.hpp"

namespace poincare {

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

}  // namespace

Term::Term() : Term(zero()) {}

Term Term::make(Kind k, unsigned index, Const c, std::vector<Term> kids) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->index = index;
  n->constant = c;
  std::size_t h = mix(static_cast<std::size_t>(k) + 1, index * 7u + static_cast<std::size_t>(c));
  for (const auto& kid : kids) {
    n->size += kid.size();
    n->depth = std::max(n->depth, kid.depth() + 1);
    h = mix(h, kid.hash());
  }
  n->hash = h;
  n->kids = std::move(kids);
  return Term(std::move(n));
}

Term Term::var(unsigned index) {
  if (index == 0) throw std::invalid_argument("variable indices start at 1");
  return make(Kind::var, index, Const::zero, {});
}

Term Term::constant(Const c) {
  static const Term zero_t = make(Kind::constant, 0, Const::zero, {});
  static const Term half_t = make(Kind::constant, 0, Const::half, {});
  static const Term one_t = make(Kind::constant, 0, Const::one, {});
  switch (c) {
    case Const::zero:
      return zero_t;
    case Const::half:
      return half_t;
    case Const::one:
      return one_t;
  }
  return zero_t;
}

Term Term::neg(const Term& t) { return make(Kind::neg, 0, Const::zero, {t}); }
Term Term::sqrt(const Term& t) { return make(Kind::sqrt, 0, Const::zero, {t}); }
Term Term::oplus(const Term& l, const Term& r) { return make(Kind::oplus, 0, Const::zero, {l, r}); }
Term Term::bullet(const Term& l, const Term& r) { return make(Kind::bullet, 0, Const::zero, {l, r}); }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::var:
      return a.index() == b.index();
    case Kind::constant:
      return a.constant() == b.constant();
    case Kind::neg:
    case Kind::sqrt:
      return a.arg() == b.arg();
    case Kind::oplus:
    case Kind::bullet:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

Term t_imp(const Term& a, const Term& b) { return Term::oplus(Term::neg(a), b); }
Term t_odot(const Term& a, const Term& b) { return Term::neg(Term::oplus(Term::neg(a), Term::neg(b))); }
Term t_meet(const Term& a, const Term& b) { return t_odot(a, t_imp(a, b)); }
Term t_join(const Term& a, const Term& b) { return t_imp(t_imp(a, b), b); }
Term t_iff(const Term& a, const Term& b) { return t_odot(t_imp(a, b), t_imp(b, a)); }

namespace {

void collect_vars(const Term& t, std::set<unsigned>& out) {
  if (t.is(Kind::var)) {
    out.insert(t.index());
    return;
  }
  if (t.is_unary()) collect_vars(t.arg(), out);
  if (t.is_binary()) {
    collect_vars(t.left(), out);
    collect_vars(t.right(), out);
  }
}

}  // namespace

std::set<unsigned> variables(const Term& t) {
  std::set<unsigned> out;
  collect_vars(t, out);
  return out;
}

bool is_closed(const Term& t) {
  switch (t.kind()) {
    case Kind::var:
    case Kind::sqrt:
      return false;
    case Kind::constant:
      return true;
    case Kind::neg:
      return is_closed(t.arg());
    case Kind::oplus:
    case Kind::bullet:
      return is_closed(t.left()) && is_closed(t.right());
  }
  return false;
}

bool is_fragment(const Term& t) {
  switch (t.kind()) {
    case Kind::var:
    case Kind::constant:
      return true;
    case Kind::sqrt:
      return t.arg().is(Kind::var);
    case Kind::neg:
      return is_fragment(t.arg());
    case Kind::oplus:
    case Kind::bullet:
      return is_fragment(t.left()) && is_fragment(t.right());
  }
  return false;
}

bool term_less(const Term& a, const Term& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return print(a) < print(b);
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << print(t); }

}  // namespace poincare
