// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace poincare {

enum class Kind { var, constant, neg, sqrt, oplus, bullet };
enum class Const { zero, half, one };

/// Immutable term over <oplus, bullet, neg, sqrt, 0, 1/2, 1> and variables x1, x2, ...
/// Nodes are shared; size and hash are cached.
class Term {
 public:
  /// The constant 0.
  Term();
  static Term var(unsigned index);
  static Term constant(Const c);
  static Term zero() { return constant(Const::zero); }
  static Term half() { return constant(Const::half); }
  static Term one() { return constant(Const::one); }
  static Term neg(const Term& t);
  static Term sqrt(const Term& t);
  static Term oplus(const Term& l, const Term& r);
  static Term bullet(const Term& l, const Term& r);

  Kind kind() const { return node_->kind; }
  unsigned index() const { return node_->index; }
  Const constant() const { return node_->constant; }
  /// Operand of neg/sqrt, or the left operand of a binary node.
  const Term& arg() const { return node_->kids[0]; }
  const Term& left() const { return node_->kids[0]; }
  const Term& right() const { return node_->kids[1]; }

  bool is(Kind k) const { return kind() == k; }
  bool is_binary() const { return kind() == Kind::oplus || kind() == Kind::bullet; }
  bool is_unary() const { return kind() == Kind::neg || kind() == Kind::sqrt; }

  std::size_t size() const { return node_->size; }
  std::size_t depth() const { return node_->depth; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    unsigned index = 0;
    Const constant = Const::zero;
    std::vector<Term> kids;
    std::size_t size = 1;
    std::size_t depth = 0;
    std::size_t hash = 0;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Kind k, unsigned index, Const c, std::vector<Term> kids);

  std::shared_ptr<const Node> node_;
};

/// Derived connectives, expanded into primitives.
Term t_imp(const Term& a, const Term& b);
Term t_odot(const Term& a, const Term& b);
Term t_meet(const Term& a, const Term& b);
Term t_join(const Term& a, const Term& b);
Term t_iff(const Term& a, const Term& b);

/// Indices of variables occurring in t.
std::set<unsigned> variables(const Term& t);
/// No variables and no sqrt.
bool is_closed(const Term& t);
/// Every sqrt node is applied directly to a variable.
bool is_fragment(const Term& t);
/// Ordering by size, then printed text.
bool term_less(const Term& a, const Term& b);

std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace poincare

template <>
struct std::hash<poincare::Term> {
  std::size_t operator()(const poincare::Term& t) const { return t.hash(); }
};
