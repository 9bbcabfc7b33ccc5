// SPDX-License-Identifier: Apache-2.0
#include "poincare/calculus/schema.hpp"

#include <array>
#include <utility>

#include "poincare/exact/qsqrt2.hpp"
#include "poincare/models/scalar.hpp"
#include "poincare/term/fraction.hpp"
#include "poincare/term/random.hpp"

namespace poincare {

namespace {

const Term& meta(unsigned i) {
  static const std::array<Term, 5> metas{Term::zero(), Term::var(1), Term::var(2), Term::var(3), Term::var(4)};
  return metas.at(i);
}

struct Template {
  // Single patterns, or (lhs, rhs) pairs for biconditionals.
  std::vector<Term> single;
  std::vector<std::pair<Term, Term>> bicond;
  std::vector<std::string> names;  // names of metavariables 1..k
};

Template make_template(SchemaId id) {
  const Term& a = meta(1);
  const Term& b = meta(2);
  const Term& c = meta(3);
  const Term half = Term::half();
  const std::vector<std::string> abc{"alpha", "beta", "gamma"};
  switch (id) {
    case SchemaId::W1:
      return {{t_imp(a, t_imp(b, a))}, {}, abc};
    case SchemaId::W2:
      return {{t_imp(t_imp(a, b), t_imp(t_imp(b, c), t_imp(a, c)))}, {}, abc};
    case SchemaId::W3:
      return {{t_imp(t_imp(Term::neg(a), Term::neg(b)), t_imp(b, a))}, {}, abc};
    case SchemaId::W4:
      return {{t_imp(t_imp(t_imp(a, b), b), t_imp(t_imp(b, a), a))}, {}, abc};
    case SchemaId::C1:
      return {{Term::one()}, {}, {}};
    case SchemaId::C2:
      return {{}, {{Term::neg(Term::zero()), Term::one()}}, {}};
    case SchemaId::C3:
      return {{}, {{Term::neg(half), half}}, {}};
    case SchemaId::C4:
      return {{}, {{t_odot(a, b), c}}, {"a", "b", "result"}};
    case SchemaId::C5:
      return {{}, {{Term::bullet(a, b), c}}, {"a", "b", "result"}};
    case SchemaId::C6:
      return {{}, {{Term::neg(a), b}}, {"a", "result"}};
    case SchemaId::P1:
      return {{t_imp(Term::bullet(a, b), Term::bullet(b, a))}, {}, abc};
    case SchemaId::P2:
      return {{}, {{Term::bullet(Term::one(), a), a}}, abc};
    case SchemaId::P3:
      return {{t_imp(Term::bullet(a, b), b)}, {}, abc};
    case SchemaId::P4:
      return {{}, {{Term::bullet(Term::bullet(a, b), c), Term::bullet(a, Term::bullet(b, c))}}, abc};
    case SchemaId::P5:
      return {{},
              {{Term::bullet(a, t_odot(b, Term::neg(c))), t_odot(Term::bullet(a, b), Term::neg(Term::bullet(a, c)))}},
              abc};
    case SchemaId::sQ1:
      return {{}, {{Term::sqrt(Term::sqrt(a)), Term::neg(a)}}, abc};
    case SchemaId::sQ2:
      return {{}, {{Term::sqrt(Term::neg(a)), Term::neg(Term::sqrt(a))}}, abc};
    case SchemaId::sQ3:
      return {{}, {{Term::sqrt(Term::oplus(a, b)), half}, {Term::sqrt(Term::bullet(a, b)), half}}, abc};
    case SchemaId::sQ4:
      return {{},
              {{Term::sqrt(Term::zero()), Term::sqrt(half)},
               {Term::sqrt(half), Term::sqrt(Term::one())},
               {Term::sqrt(Term::one()), half}},
              {}};
    case SchemaId::sQ5:
      return {{threshold_term(a, Term::sqrt(a), meta(4))}, {}, {"alpha", "beta", "gamma", "s"}};
  }
  return {};
}

const Template& template_for(SchemaId id) {
  static const auto table = [] {
    std::map<SchemaId, Template> m;
    for (auto s : all_schemas()) m.emplace(s, make_template(s));
    return m;
  }();
  return table.at(id);
}

// Candidate (a, n) readings of a fraction term; 0 fits every exponent.
std::vector<FracSpec> readings(const Term& t) {
  const auto spec = recognize_frac(t);
  if (!spec) return {};
  if (spec->a != 0) return {*spec};
  std::vector<FracSpec> out;
  for (unsigned long n = 0; n <= 62; ++n) out.push_back({0, n});
  return out;
}

bool denotes(const Term& t, unsigned long c, unsigned long n) {
  const auto spec = recognize_frac(t);
  if (!spec) return false;
  if (c == 0) return spec->a == 0;
  return spec->a == c && spec->n == n;
}

bool fraction_side_condition(SchemaId id, const std::map<unsigned, Term>& b) {
  switch (id) {
    case SchemaId::C4:
      for (const auto& x : readings(b.at(1)))
        for (const auto& y : readings(b.at(2))) {
          if (x.n < y.n) continue;
          const unsigned long top = 1UL << x.n;
          const unsigned long sum = x.a + (y.a << (x.n - y.n));
          if (denotes(b.at(3), sum > top ? sum - top : 0, x.n)) return true;
        }
      return false;
    case SchemaId::C5:
      for (const auto& x : readings(b.at(1)))
        for (const auto& y : readings(b.at(2))) {
          if (x.n + y.n > 62) continue;
          if (denotes(b.at(3), x.a * y.a, x.n + y.n)) return true;
        }
      return false;
    case SchemaId::C6:
      for (const auto& x : readings(b.at(1)))
        if (denotes(b.at(2), (1UL << x.n) - x.a, x.n)) return true;
      return false;
    default:
      return true;
  }
}

}  // namespace

const std::vector<SchemaId>& all_schemas() {
  static const std::vector<SchemaId> ids{
      SchemaId::W1, SchemaId::W2, SchemaId::W3, SchemaId::W4, SchemaId::C1, SchemaId::C2, SchemaId::C3,
      SchemaId::C4, SchemaId::C5, SchemaId::C6, SchemaId::P1, SchemaId::P2, SchemaId::P3, SchemaId::P4,
      SchemaId::P5, SchemaId::sQ1, SchemaId::sQ2, SchemaId::sQ3, SchemaId::sQ4, SchemaId::sQ5,
  };
  return ids;
}

std::string schema_name(SchemaId id) {
  static const char* names[] = {"W1", "W2", "W3", "W4", "C1", "C2", "C3", "C4", "C5", "C6",
                                "P1", "P2", "P3", "P4", "P5", "sQ1", "sQ2", "sQ3", "sQ4", "sQ5"};
  return names[static_cast<int>(id)];
}

std::optional<SchemaId> schema_from_name(std::string_view name) {
  for (auto id : all_schemas())
    if (schema_name(id) == name) return id;
  return std::nullopt;
}

bool is_sqrt_schema(SchemaId id) {
  return id == SchemaId::sQ1 || id == SchemaId::sQ2 || id == SchemaId::sQ3 || id == SchemaId::sQ4 ||
         id == SchemaId::sQ5;
}

bool match_pattern(const Term& pattern, const Term& t, std::map<unsigned, Term>& bindings) {
  if (pattern.is(Kind::var)) {
    const auto it = bindings.find(pattern.index());
    if (it != bindings.end()) return it->second == t;
    bindings.emplace(pattern.index(), t);
    return true;
  }
  if (pattern.kind() != t.kind()) return false;
  switch (t.kind()) {
    case Kind::constant:
      return pattern.constant() == t.constant();
    case Kind::neg:
    case Kind::sqrt:
      return match_pattern(pattern.arg(), t.arg(), bindings);
    case Kind::oplus:
    case Kind::bullet:
      return match_pattern(pattern.left(), t.left(), bindings) && match_pattern(pattern.right(), t.right(), bindings);
    case Kind::var:
      break;
  }
  return false;
}

Term instantiate(const Term& pattern, const std::map<unsigned, Term>& bindings) {
  switch (pattern.kind()) {
    case Kind::var: {
      const auto it = bindings.find(pattern.index());
      return it == bindings.end() ? pattern : it->second;
    }
    case Kind::constant:
      return pattern;
    case Kind::neg:
      return Term::neg(instantiate(pattern.arg(), bindings));
    case Kind::sqrt:
      return Term::sqrt(instantiate(pattern.arg(), bindings));
    case Kind::oplus:
      return Term::oplus(instantiate(pattern.left(), bindings), instantiate(pattern.right(), bindings));
    case Kind::bullet:
      return Term::bullet(instantiate(pattern.left(), bindings), instantiate(pattern.right(), bindings));
  }
  return pattern;
}

bool valid_threshold_witness(const Term& s) {
  const auto v = try_const_eval(s);
  return v && qsqrt2_cmp(QSqrt2(v->to_rational()), theta()) != std::strong_ordering::less;
}

Term threshold_term(const Term& x, const Term& y, const Term& s) {
  const Term q = quarter_term();
  return t_imp(Term::oplus(Term::bullet(q, x), Term::bullet(q, y)), s);
}

std::optional<Bindings> match_schema(SchemaId id, const Term& t) {
  const Template& tpl = template_for(id);
  std::vector<Term> candidates = tpl.single;
  for (const auto& [l, r] : tpl.bicond) {
    candidates.push_back(t_iff(l, r));
    candidates.push_back(t_imp(l, r));
    candidates.push_back(t_imp(r, l));
  }
  for (const auto& pattern : candidates) {
    std::map<unsigned, Term> b;
    if (!match_pattern(pattern, t, b)) continue;
    if (!fraction_side_condition(id, b)) continue;
    if (id == SchemaId::sQ5 && !valid_threshold_witness(b.at(4))) continue;
    Bindings out;
    for (const auto& [k, v] : b) out.emplace(tpl.names.at(k - 1), v);
    return out;
  }
  return std::nullopt;
}

bool is_TD_member(const Term& t) {
  static const Term pattern = threshold_term(meta(1), meta(2), meta(3));
  std::map<unsigned, Term> b;
  if (!match_pattern(pattern, t, b)) return false;
  if (!valid_threshold_witness(b.at(3))) return false;
  const Term& x_slot = b.at(1);
  const Term& core = x_slot.is(Kind::neg) ? x_slot.arg() : x_slot;
  if (!core.is(Kind::var) && !core.is(Kind::constant)) return false;
  const Term root = core.is(Kind::var) ? Term::sqrt(core) : Term::half();
  const Term& y_slot = b.at(2);
  return y_slot == root || y_slot == Term::neg(root);
}

Term random_instance(SchemaId id, Rng& rng, unsigned max_depth, unsigned vars, const std::vector<Dyadic>& witnesses) {
  const Template& tpl = template_for(id);
  const TermShape shape{max_depth, vars, true};
  auto frac = [&](unsigned long a, unsigned long n) { return frac_term({a, n}); };
  auto pick = [&](long lo, long hi) { return static_cast<unsigned long>(uniform_int(rng, lo, hi)); };
  switch (id) {
    case SchemaId::C4: {
      const unsigned long n = pick(1, 4), m = pick(1, static_cast<long>(n));
      const unsigned long a = pick(0, 1L << n), b = pick(0, 1L << m);
      const unsigned long sum = a + (b << (n - m));
      const unsigned long c = sum > (1UL << n) ? sum - (1UL << n) : 0;
      return t_iff(t_odot(frac(a, n), frac(b, m)), frac(c, n));
    }
    case SchemaId::C5: {
      const unsigned long n = pick(1, 3), m = pick(1, 3);
      const unsigned long a = pick(0, 1L << n), b = pick(0, 1L << m);
      return t_iff(Term::bullet(frac(a, n), frac(b, m)), frac(a * b, n + m));
    }
    case SchemaId::C6: {
      const unsigned long n = pick(1, 4), a = pick(0, 1L << n);
      return t_iff(Term::neg(frac(a, n)), frac((1UL << n) - a, n));
    }
    case SchemaId::sQ5: {
      const Dyadic& s = witnesses.at(pick(0, static_cast<long>(witnesses.size()) - 1));
      const Term alpha = random_term(rng, shape);
      return threshold_term(alpha, Term::sqrt(alpha), frac(s.a().get_ui(), s.n()));
    }
    default:
      break;
  }
  std::map<unsigned, Term> b;
  for (unsigned k = 1; k <= 3; ++k) b.emplace(k, random_term(rng, shape));
  if (!tpl.single.empty()) return instantiate(tpl.single.front(), b);
  const auto& [l, r] = tpl.bicond.at(pick(0, static_cast<long>(tpl.bicond.size()) - 1));
  return instantiate(t_iff(l, r), b);
}

}  // namespace poincare
