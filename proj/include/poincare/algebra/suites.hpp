// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poincare/algebra/signature.hpp"
#include "poincare/exact/dyadic.hpp"
#include "poincare/exact/qsqrt2.hpp"

namespace poincare {

struct SuiteNotApplicable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AxiomReport {
  std::string id;
  std::size_t checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  /// "<id> OK (<n> checked)" or "<id> FAIL <first violating assignment>".
  std::string line() const { return ok() ? id + " OK (" + std::to_string(checked) + " checked)" : id + " FAIL " + violations.front(); }
};

/// Where assignments come from: every tuple over the model's finite slice, or
/// `count` seeded random tuples per axiom.
struct SampleSource {
  enum class Kind { exhaustive, random };
  Kind kind = Kind::exhaustive;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  /// Largest exponent n used by the fraction-law families.
  unsigned long frac_bound = 4;
  /// Cap on stored violations per axiom.
  std::size_t max_violations = 16;

  static SampleSource exhaustive() { return {}; }
  static SampleSource random(std::size_t count, std::uint64_t seed) { return {Kind::random, count, seed}; }
};

template <Model M>
struct Axiom {
  using Tuple = std::vector<ElementOf<M>>;
  std::string id;
  std::size_t arity = 0;
  std::function<bool(const M&, const Tuple&)> holds;
  /// Closed family over fraction constants; replaces `holds` when set.
  std::function<void(const M&, const SampleSource&, AxiomReport&)> family;
};

inline const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"MV", "QMV", "SQMV", "SQPMV", "PMVHALF", "IP"};
  return ids;
}

/// Candidate IP witnesses before filtering.
inline std::vector<Dyadic> ip_witness_candidates() {
  return {Dyadic(7, 4), Dyadic(55, 7), Dyadic(437, 10)};
}

/// Candidates s with s >= theta(), decided exactly.
inline std::vector<Dyadic> filter_ip_witnesses(const std::vector<Dyadic>& candidates) {
  std::vector<Dyadic> out;
  for (const auto& s : candidates)
    if (qsqrt2_cmp(QSqrt2(s.to_rational()), theta()) != std::strong_ordering::less) out.push_back(s);
  return out;
}

inline const std::vector<Dyadic>& default_ip_witnesses() {
  static const std::vector<Dyadic> w = filter_ip_witnesses(ip_witness_candidates());
  return w;
}

namespace detail {

template <Model M>
using Tuple = std::vector<ElementOf<M>>;

template <Model M>
bool qmv_all(const M& m, const Tuple<M>& v);

template <Model M>
std::vector<Axiom<M>> mv_suite() {
  return {
      {"MV1", 3,
       [](const M& m, const Tuple<M>& v) {
         return m.oplus(v[0], m.oplus(v[1], v[2])) == m.oplus(m.oplus(v[0], v[1]), v[2]) &&
                m.oplus(v[0], v[1]) == m.oplus(v[1], v[0]) && m.oplus(v[0], m.zero()) == v[0];
       },
       {}},
      {"MV2", 1, [](const M& m, const Tuple<M>& v) { return m.neg(m.neg(v[0])) == v[0]; }, {}},
      {"MV3", 1, [](const M& m, const Tuple<M>& v) { return m.oplus(v[0], m.neg(m.zero())) == m.neg(m.zero()); }, {}},
      {"MV4", 2,
       [](const M& m, const Tuple<M>& v) {
         return m.oplus(m.neg(m.oplus(m.neg(v[0]), v[1])), v[1]) == m.oplus(m.neg(m.oplus(m.neg(v[1]), v[0])), v[0]);
       },
       {}},
  };
}

template <Model M>
std::vector<Axiom<M>> qmv_suite() {
  return {
      {"Q1", 3,
       [](const M& m, const Tuple<M>& v) {
         return m.oplus(v[0], m.oplus(v[1], v[2])) == m.oplus(m.oplus(v[0], v[1]), v[2]);
       },
       {}},
      {"Q2", 1, [](const M& m, const Tuple<M>& v) { return m.neg(m.neg(v[0])) == v[0]; }, {}},
      {"Q3", 1, [](const M& m, const Tuple<M>& v) { return m.oplus(v[0], m.one()) == m.one(); }, {}},
      {"Q4", 2,
       [](const M& m, const Tuple<M>& v) {
         return m.oplus(m.neg(m.oplus(m.neg(v[0]), v[1])), v[1]) == m.oplus(m.neg(m.oplus(m.neg(v[1]), v[0])), v[0]);
       },
       {}},
      {"Q5", 1,
       [](const M& m, const Tuple<M>& v) { return m.neg(m.oplus(v[0], m.zero())) == m.oplus(m.neg(v[0]), m.zero()); },
       {}},
      {"Q6", 2,
       [](const M& m, const Tuple<M>& v) { return m.oplus(m.oplus(v[0], v[1]), m.zero()) == m.oplus(v[0], v[1]); }, {}},
      {"Q7", 0, [](const M& m, const Tuple<M>&) { return m.neg(m.zero()) == m.one(); }, {}},
  };
}

template <Model M>
bool qmv_all(const M& m, const Tuple<M>& v) {
  for (const auto& ax : qmv_suite<M>()) {
    if (!ax.holds(m, Tuple<M>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(ax.arity)))) return false;
  }
  return true;
}

template <SqrtModel M>
std::vector<Axiom<M>> sqmv_suite() {
  return {
      {"SQ1", 3, [](const M& m, const Tuple<M>& v) { return qmv_all(m, v); }, {}},
      {"SQ2", 1, [](const M& m, const Tuple<M>& v) { return m.sqrt_op(m.neg(v[0])) == m.neg(m.sqrt_op(v[0])); }, {}},
      {"SQ3", 1, [](const M& m, const Tuple<M>& v) { return m.sqrt_op(m.sqrt_op(v[0])) == m.neg(v[0]); }, {}},
      {"SQ4", 2,
       [](const M& m, const Tuple<M>& v) {
         return m.oplus(m.sqrt_op(m.oplus(v[0], v[1])), m.zero()) == m.half() && m.sqrt_op(m.half()) == m.half();
       },
       {}},
  };
}

template <SqrtModel M>
std::vector<Axiom<M>> sqpmv_suite() {
  return {
      {"SQPMV1", 3,
       [](const M& m, const Tuple<M>& v) {
         for (const auto& ax : sqmv_suite<M>())
           if (!ax.holds(m, Tuple<M>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(ax.arity)))) return false;
         return true;
       },
       {}},
      {"SQPMV2", 2, [](const M& m, const Tuple<M>& v) { return m.bullet(v[0], v[1]) == m.bullet(v[1], v[0]); }, {}},
      {"SQPMV3", 3,
       [](const M& m, const Tuple<M>& v) {
         return m.bullet(v[0], m.bullet(v[1], v[2])) == m.bullet(m.bullet(v[0], v[1]), v[2]);
       },
       {}},
      {"SQPMV4", 1, [](const M& m, const Tuple<M>& v) { return m.bullet(v[0], m.one()) == m.oplus(v[0], m.zero()); }, {}},
      {"SQPMV5", 2,
       [](const M& m, const Tuple<M>& v) {
         const auto p = m.bullet(v[0], v[1]);
         return p == m.oplus(p, m.zero());
       },
       {}},
      {"SQPMV6", 3,
       [](const M& m, const Tuple<M>& v) {
         return m.bullet(v[0], odot(m, v[1], m.neg(v[2]))) ==
                odot(m, m.bullet(v[0], v[1]), m.neg(m.bullet(v[0], v[2])));
       },
       {}},
      {"SQPMV7", 2,
       [](const M& m, const Tuple<M>& v) { return m.oplus(m.sqrt_op(m.bullet(v[0], v[1])), m.zero()) == m.half(); }, {}},
  };
}

inline std::string frac_label(unsigned long a, unsigned long n) {
  return std::to_string(a) + "/2^" + std::to_string(n);
}

template <Model M>
void record(AxiomReport& r, const SampleSource& src, bool ok, const std::function<std::string()>& describe) {
  ++r.checked;
  if (!ok && r.violations.size() < src.max_violations) r.violations.push_back(describe());
}

template <Model M>
std::vector<Axiom<M>> pmvhalf_suite() {
  using Fam = std::function<void(const M&, const SampleSource&, AxiomReport&)>;
  const Fam c4 = [](const M& m, const SampleSource& src, AxiomReport& r) {
    for (unsigned long n = 1; n <= src.frac_bound; ++n)
      for (unsigned long mm = 1; mm <= n; ++mm)
        for (unsigned long a = 0; a <= (1UL << n); ++a)
          for (unsigned long b = 0; b <= (1UL << mm); ++b) {
            const long raw = static_cast<long>(a + (b << (n - mm))) - static_cast<long>(1UL << n);
            const auto c = static_cast<unsigned long>(std::max(0L, raw));
            const bool ok = odot(m, frac_element(m, a, n), frac_element(m, b, mm)) == frac_element(m, c, n);
            record<M>(r, src, ok, [&] { return "a=" + frac_label(a, n) + " b=" + frac_label(b, mm); });
          }
  };
  const Fam c5 = [](const M& m, const SampleSource& src, AxiomReport& r) {
    for (unsigned long n = 1; n <= src.frac_bound; ++n)
      for (unsigned long mm = 1; mm <= src.frac_bound; ++mm)
        for (unsigned long a = 0; a <= (1UL << n); ++a)
          for (unsigned long b = 0; b <= (1UL << mm); ++b) {
            const bool ok = m.bullet(frac_element(m, a, n), frac_element(m, b, mm)) == frac_element(m, a * b, n + mm);
            record<M>(r, src, ok, [&] { return "a=" + frac_label(a, n) + " b=" + frac_label(b, mm); });
          }
  };
  const Fam c6 = [](const M& m, const SampleSource& src, AxiomReport& r) {
    for (unsigned long n = 1; n <= src.frac_bound; ++n)
      for (unsigned long a = 0; a <= (1UL << n); ++a) {
        const bool ok = m.neg(frac_element(m, a, n)) == frac_element(m, (1UL << n) - a, n);
        record<M>(r, src, ok, [&] { return "a=" + frac_label(a, n); });
      }
  };
  return {
      {"PMVHALF2", 0, [](const M& m, const Tuple<M>&) { return m.neg(m.half()) == m.half(); }, {}},
      {"PMVHALF3", 0, {}, c4},
      {"PMVHALF4", 0, {}, c5},
      {"PMVHALF5", 0, {}, c6},
  };
}

template <SqrtModel M>
std::vector<Axiom<M>> ip_suite(const std::vector<Dyadic>& witnesses) {
  std::vector<Axiom<M>> out;
  for (const auto& s : witnesses) {
    const unsigned long a = s.a().get_ui();
    const unsigned long n = s.n();
    out.push_back({"P2(s=" + s.to_rational().str() + ")", 1,
                   [a, n](const M& m, const Tuple<M>& v) {
                     const auto quarter = frac_element(m, 1, 2);
                     const auto lhs = m.oplus(m.bullet(quarter, v[0]), m.bullet(quarter, m.sqrt_op(v[0])));
                     return imp(m, lhs, frac_element(m, a, n)) == m.one();
                   },
                   {}});
  }
  return out;
}

inline const char* var_name(std::size_t i) {
  static const char* names[] = {"x", "y", "z", "w"};
  return names[i];
}

}  // namespace detail

/// Axioms of a suite; throws SuiteNotApplicable for sqrt suites on models without sqrt
/// and std::invalid_argument for unknown ids.
template <Model M>
std::vector<Axiom<M>> suite_axioms(const std::string& suite, const std::vector<Dyadic>& witnesses = default_ip_witnesses()) {
  if (suite == "MV") return detail::mv_suite<M>();
  if (suite == "QMV") return detail::qmv_suite<M>();
  if (suite == "PMVHALF") return detail::pmvhalf_suite<M>();
  if (suite == "SQMV" || suite == "SQPMV" || suite == "IP") {
    if constexpr (SqrtModel<M>) {
      if (suite == "SQMV") return detail::sqmv_suite<M>();
      if (suite == "SQPMV") return detail::sqpmv_suite<M>();
      return detail::ip_suite<M>(witnesses);
    } else {
      throw SuiteNotApplicable("suite " + suite + " needs sqrt, which this model lacks");
    }
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

template <Model M>
AxiomReport check_axiom(const M& m, const Axiom<M>& ax, const SampleSource& src) {
  AxiomReport report{ax.id, 0, {}};
  if (ax.family) {
    ax.family(m, src, report);
    return report;
  }
  using Tuple = std::vector<ElementOf<M>>;
  auto run = [&](const Tuple& t) {
    detail::record<M>(report, src, ax.holds(m, t), [&] {
      std::string s;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ' ';
        s += std::string(detail::var_name(i)) + "=" + m.render(t[i]);
      }
      return s;
    });
  };
  if (ax.arity == 0) {
    run({});
    return report;
  }
  if (src.kind == SampleSource::Kind::random) {
    Rng rng(src.seed);
    for (std::size_t k = 0; k < src.count; ++k) {
      Tuple t;
      for (std::size_t i = 0; i < ax.arity; ++i) t.push_back(m.sample(rng));
      run(t);
    }
    return report;
  }
  const auto pool = m.elements();
  if (pool.empty()) return report;
  std::vector<std::size_t> idx(ax.arity, 0);
  while (true) {
    Tuple t;
    for (auto i : idx) t.push_back(pool[i]);
    run(t);
    std::size_t pos = ax.arity;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < pool.size()) break;
      idx[pos] = 0;
      if (pos == 0) return report;
    }
  }
}

template <Model M>
std::vector<AxiomReport> check_axiom_suite(const M& m, const std::string& suite, const SampleSource& src,
                                           const std::vector<Dyadic>& witnesses = default_ip_witnesses()) {
  std::vector<AxiomReport> out;
  for (const auto& ax : suite_axioms<M>(suite, witnesses)) out.push_back(check_axiom(m, ax, src));
  return out;
}

}  // namespace poincare
