// SPDX-License-Identifier: Apache-2.0
#include "poincare/calculus/search.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "poincare/calculus/checker.hpp"
#include "poincare/calculus/schema.hpp"
#include "poincare/term/syntax.hpp"

namespace poincare {

namespace {

constexpr unsigned kMeta = 1'000'000;

bool is_meta(const Term& t) { return t.is(Kind::var) && t.index() >= kMeta; }

using Subst = std::unordered_map<unsigned, Term>;

Term walk(Term t, const Subst& s) {
  while (is_meta(t)) {
    const auto it = s.find(t.index());
    if (it == s.end()) break;
    t = it->second;
  }
  return t;
}

bool occurs(unsigned v, const Term& t, const Subst& s) {
  const Term w = walk(t, s);
  if (is_meta(w)) return w.index() == v;
  switch (w.kind()) {
    case Kind::neg:
    case Kind::sqrt:
      return occurs(v, w.arg(), s);
    case Kind::oplus:
    case Kind::bullet:
      return occurs(v, w.left(), s) || occurs(v, w.right(), s);
    default:
      return false;
  }
}

bool unify(const Term& x0, const Term& y0, Subst& s) {
  const Term x = walk(x0, s);
  const Term y = walk(y0, s);
  if (x == y) return true;
  if (is_meta(x)) {
    if (occurs(x.index(), y, s)) return false;
    s.emplace(x.index(), y);
    return true;
  }
  if (is_meta(y)) return unify(y, x, s);
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Kind::neg:
    case Kind::sqrt:
      return unify(x.arg(), y.arg(), s);
    case Kind::oplus:
    case Kind::bullet:
      return unify(x.left(), y.left(), s) && unify(x.right(), y.right(), s);
    default:
      return false;
  }
}

Term resolve(const Term& t, const Subst& s) {
  const Term w = walk(t, s);
  switch (w.kind()) {
    case Kind::neg:
      return Term::neg(resolve(w.arg(), s));
    case Kind::sqrt:
      return Term::sqrt(resolve(w.arg(), s));
    case Kind::oplus:
      return Term::oplus(resolve(w.left(), s), resolve(w.right(), s));
    case Kind::bullet:
      return Term::bullet(resolve(w.left(), s), resolve(w.right(), s));
    default:
      return w;
  }
}

/// Renames metavariables in first-occurrence order starting at `next`.
Term rename(const Term& t, std::unordered_map<unsigned, unsigned>& map, unsigned& next) {
  switch (t.kind()) {
    case Kind::var:
      if (!is_meta(t)) return t;
      if (const auto it = map.find(t.index()); it != map.end()) return Term::var(it->second);
      map.emplace(t.index(), next);
      return Term::var(next++);
    case Kind::neg:
      return Term::neg(rename(t.arg(), map, next));
    case Kind::sqrt:
      return Term::sqrt(rename(t.arg(), map, next));
    case Kind::oplus: {
      Term l = rename(t.left(), map, next);
      return Term::oplus(l, rename(t.right(), map, next));
    }
    case Kind::bullet: {
      Term l = rename(t.left(), map, next);
      return Term::bullet(l, rename(t.right(), map, next));
    }
    default:
      return t;
  }
}

Term canon(const Term& t) {
  std::unordered_map<unsigned, unsigned> map;
  unsigned next = kMeta;
  return rename(t, map, next);
}

Term fresh(const Term& t, unsigned& next) {
  std::unordered_map<unsigned, unsigned> map;
  return rename(t, map, next);
}

/// One-way matching: metavariables of p are bound, everything else is rigid.
bool instance_of(const Term& p, const Term& t, Subst& s) {
  if (is_meta(p)) {
    const auto [it, inserted] = s.emplace(p.index(), t);
    return inserted || it->second == t;
  }
  if (p.kind() != t.kind()) return false;
  switch (p.kind()) {
    case Kind::var:
      return p.index() == t.index();
    case Kind::constant:
      return p.constant() == t.constant();
    case Kind::neg:
    case Kind::sqrt:
      return instance_of(p.arg(), t.arg(), s);
    case Kind::oplus:
    case Kind::bullet:
      return instance_of(p.left(), t.left(), s) && instance_of(p.right(), t.right(), s);
  }
  return false;
}

bool subsumes(const Term& general, const Term& t) {
  Subst s;
  return instance_of(general, t, s);
}

struct Node {
  enum class Source { axiom, hypothesis, mp };
  Term term;
  Source source = Source::axiom;
  SchemaId schema = SchemaId::C1;
  std::size_t major = 0;
  std::size_t minor = 0;
  std::string text;

  static Node leaf(Term t, Source source, SchemaId schema = SchemaId::C1) {
    Node n;
    n.term = std::move(t);
    n.source = source;
    n.schema = schema;
    return n;
  }
};

/// Most general conclusion of MP with the given major and minor premises.
std::optional<Term> detach(const Term& major, const Term& minor) {
  unsigned next = kMeta;
  const Term maj = fresh(major, next);
  const Term min = fresh(minor, next);
  const Term result = Term::var(next);
  Subst s;
  if (!unify(maj, t_imp(min, result), s)) return std::nullopt;
  return canon(resolve(result, s));
}

class Prover {
 public:
  Prover(const Term& goal, const std::vector<Term>& theory, const SearchLimits& limits)
      : goal_(goal), theory_(theory), limits_(limits), passive_(Order{&nodes_}) {}

  std::optional<std::size_t> run() {
    static const std::vector<SchemaId> seeds{SchemaId::W1, SchemaId::W2, SchemaId::W3, SchemaId::W4};
    for (auto id : seeds) {
      std::map<unsigned, Term> metas;
      for (unsigned k = 1; k <= 3; ++k) metas.emplace(k, Term::var(kMeta + k));
      const auto instance = canon(schema_pattern(id, metas));
      if (auto hit = add(Node::leaf(instance, Node::Source::axiom, id))) return hit;
    }
    if (auto hit = add(Node::leaf(Term::one(), Node::Source::axiom))) return hit;
    for (const auto& t : theory_)
      if (auto hit = add(Node::leaf(t, Node::Source::hypothesis))) return hit;
    std::size_t given = 0;
    while (!passive_.empty() && given < limits_.max_given) {
      const std::size_t g = passive_.top();
      passive_.pop();
      if (std::any_of(active_.begin(), active_.end(), [&](std::size_t a) { return subsumes(nodes_[a].term, nodes_[g].term); }))
        continue;
      ++given;
      active_.push_back(g);
      for (std::size_t a : active_) {
        if (auto hit = infer(a, g)) return hit;
        if (a != g)
          if (auto hit = infer(g, a)) return hit;
      }
    }
    return std::nullopt;
  }

  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  struct Order {
    const std::vector<Node>* nodes;
    bool operator()(std::size_t x, std::size_t y) const {
      const Node& a = (*nodes)[x];
      const Node& b = (*nodes)[y];
      if (a.term.size() != b.term.size()) return a.term.size() > b.term.size();
      if (a.text != b.text) return a.text > b.text;
      return x > y;
    }
  };

  static Term schema_pattern(SchemaId id, const std::map<unsigned, Term>& metas) {
    const Term a = Term::var(1), b = Term::var(2), c = Term::var(3);
    Term pattern;
    switch (id) {
      case SchemaId::W1:
        pattern = t_imp(a, t_imp(b, a));
        break;
      case SchemaId::W2:
        pattern = t_imp(t_imp(a, b), t_imp(t_imp(b, c), t_imp(a, c)));
        break;
      case SchemaId::W3:
        pattern = t_imp(t_imp(Term::neg(a), Term::neg(b)), t_imp(b, a));
        break;
      default:
        pattern = t_imp(t_imp(t_imp(a, b), b), t_imp(t_imp(b, a), a));
        break;
    }
    return instantiate(pattern, metas);
  }

  std::optional<std::size_t> infer(std::size_t major, std::size_t minor) {
    const auto r = detach(nodes_[major].term, nodes_[minor].term);
    if (!r || r->size() > limits_.max_size) return std::nullopt;
    Node n = Node::leaf(*r, Node::Source::mp);
    n.major = major;
    n.minor = minor;
    return add(std::move(n));
  }

  std::optional<std::size_t> add(Node n) {
    if (!seen_.insert(n.term).second) return std::nullopt;
    n.text = print(n.term);
    nodes_.push_back(std::move(n));
    const std::size_t id = nodes_.size() - 1;
    if (subsumes(nodes_[id].term, goal_)) return id;
    passive_.push(id);
    return std::nullopt;
  }

  Term goal_;
  std::vector<Term> theory_;
  SearchLimits limits_;
  std::vector<Node> nodes_;
  std::unordered_set<Term> seen_;
  std::priority_queue<std::size_t, std::vector<std::size_t>, Order> passive_;
  std::vector<std::size_t> active_;
};

struct TreeNode {
  std::size_t node = 0;
  Term term;
  std::size_t major = 0;
  std::size_t minor = 0;
};

class Reconstruction {
 public:
  Reconstruction(const std::vector<Node>& nodes, std::size_t cap) : nodes_(nodes), cap_(cap) {}

  /// Builds the proof tree of node id, with fresh metavariables at each leaf.
  std::optional<std::size_t> build(std::size_t id) {
    if (tree_.size() >= cap_) return std::nullopt;
    const Node& n = nodes_[id];
    TreeNode t{id, n.term};
    if (n.source == Node::Source::mp) {
      const auto major = build(n.major);
      if (!major) return std::nullopt;
      const auto minor = build(n.minor);
      if (!minor) return std::nullopt;
      t.major = *major;
      t.minor = *minor;
      t.term = Term::var(next_++);
      if (!unify(tree_[*major].term, t_imp(tree_[*minor].term, t.term), subst_)) return std::nullopt;
    } else {
      t.term = fresh(n.term, next_);
    }
    tree_.push_back(std::move(t));
    return tree_.size() - 1;
  }

  bool close(std::size_t root, const Term& goal) { return unify(tree_[root].term, goal, subst_); }

  /// Post-order lines with shared terms emitted once.
  std::optional<ProofScript> emit(std::size_t root, const Term& filler, const SearchLimits& limits) {
    Subst ground;
    for (auto& t : tree_) {
      t.term = resolve(t.term, subst_);
      fill(t.term, filler, ground);
      t.term = resolve(t.term, ground);
    }
    ProofScript script;
    std::unordered_map<Term, std::size_t> line_of;
    if (!emit_node(root, script, line_of, limits)) return std::nullopt;
    return script;
  }

 private:
  static void fill(const Term& t, const Term& filler, Subst& ground) {
    if (is_meta(t)) {
      ground.emplace(t.index(), filler);
      return;
    }
    if (t.is_unary()) fill(t.arg(), filler, ground);
    if (t.is_binary()) {
      fill(t.left(), filler, ground);
      fill(t.right(), filler, ground);
    }
  }

  bool emit_node(std::size_t id, ProofScript& script, std::unordered_map<Term, std::size_t>& line_of,
                 const SearchLimits& limits) {
    const TreeNode& t = tree_[id];
    if (line_of.count(t.term)) return true;
    const Node& n = nodes_[t.node];
    Justification just;
    switch (n.source) {
      case Node::Source::axiom:
        just = Justification::axiom(n.schema);
        break;
      case Node::Source::hypothesis:
        just = Justification::hypothesis();
        break;
      case Node::Source::mp:
        if (!emit_node(t.minor, script, line_of, limits) || !emit_node(t.major, script, line_of, limits)) return false;
        just = Justification::modus_ponens(line_of.at(tree_[t.minor].term), line_of.at(tree_[t.major].term));
        break;
    }
    if (script.lines.size() >= limits.max_lines) return false;
    const std::size_t k = script.lines.size() + 1;
    script.lines.push_back({k, t.term, just});
    line_of.emplace(t.term, k);
    return true;
  }

  const std::vector<Node>& nodes_;
  std::size_t cap_;
  std::vector<TreeNode> tree_;
  Subst subst_;
  unsigned next_ = 2 * kMeta;
};

void collect(const Term& t, std::unordered_set<Term>& out) {
  if (!out.insert(t).second) return;
  if (t.is_unary()) collect(t.arg(), out);
  if (t.is_binary()) {
    collect(t.left(), out);
    collect(t.right(), out);
  }
}

ProofScript one_line(const Term& goal, const std::vector<Term>& theory, Justification just) {
  ProofScript script;
  script.theory = theory;
  script.goal = goal;
  script.lines.push_back({1, goal, std::move(just)});
  return script;
}

}  // namespace

std::vector<Term> subterm_pool(const std::vector<Term>& terms) {
  std::unordered_set<Term> seen;
  for (const auto& t : terms) collect(t, seen);
  std::vector<std::pair<std::string, Term>> keyed;
  for (const auto& t : seen) keyed.emplace_back(print(t), t);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
    return x.first < y.first;
  });
  std::vector<Term> out;
  for (auto& [text, t] : keyed) out.push_back(t);
  return out;
}

std::optional<ProofScript> bounded_proof_search(const Term& goal, const std::vector<Term>& theory,
                                                const SearchLimits& limits) {
  std::vector<Term> all = theory;
  all.push_back(goal);
  for (const auto& t : all)
    for (unsigned v : variables(t))
      if (v >= kMeta) throw std::invalid_argument("variable index too large for proof search: x" + std::to_string(v));

  if (std::find(theory.begin(), theory.end(), goal) != theory.end())
    return one_line(goal, theory, Justification::hypothesis());
  for (auto id : all_schemas())
    if (match_schema(id, goal)) return one_line(goal, theory, Justification::axiom(id));

  Prover prover(goal, theory, limits);
  const auto found = prover.run();
  if (!found) return std::nullopt;

  Reconstruction rec(prover.nodes(), 4 * limits.max_lines + 64);
  const auto root = rec.build(*found);
  if (!root || !rec.close(*root, goal)) return std::nullopt;
  const auto pool = subterm_pool(all);
  auto script = rec.emit(*root, pool.front(), limits);
  if (!script) return std::nullopt;
  script->theory = theory;
  script->goal = goal;
  if (!check_proof(*script).valid) return std::nullopt;
  return script;
}

}  // namespace poincare
