// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "poincare/algebra/suites.hpp"
#include "poincare/calculus/checker.hpp"
#include "poincare/calculus/script.hpp"
#include "poincare/calculus/semantics.hpp"
#include "poincare/exact/dyadic.hpp"
#include "poincare/exact/qsqrt2.hpp"
#include "poincare/models/bloch.hpp"
#include "poincare/models/chain.hpp"
#include "poincare/models/density.hpp"
#include "poincare/models/square.hpp"
#include "poincare/term/eval.hpp"
#include "poincare/term/fraction.hpp"
#include "poincare/term/random.hpp"
#include "poincare/term/translate.hpp"

using namespace poincare;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string cli_path;
std::string fixtures_dir;

Rational p(const BlochState& s) { return (Rational(1) - s.r3()) / Rational(2); }

Outcome gate_laws() {
  Outcome out;
  const BlochModel m(8, 64);
  const auto c = bloch_consts();
  Rng rng(101);
  for (int k = 0; k < 1000; ++k) {
    const BlochState t = m.sample(rng), s = m.sample(rng), u = m.sample(rng);
    const std::string at = " at t=" + t.str() + " s=" + s.str();
    // The units act as identities on regular states only.
    out.expect(m.oplus(m.oplus(t, s), u) == m.oplus(t, m.oplus(s, u)), "oplus assoc" + at);
    out.expect(m.bullet(m.bullet(t, s), u) == m.bullet(t, m.bullet(s, u)), "bullet assoc" + at);
    out.expect(m.oplus(t, s) == m.oplus(s, t), "oplus comm" + at);
    out.expect(m.bullet(t, s) == m.bullet(s, t), "bullet comm" + at);
    const BlochState reg = bloch_rho(p(t));
    out.expect(m.oplus(reg, c.p0) == reg && m.bullet(reg, c.p1) == reg, "units on regular" + at);
    out.expect(m.bullet(t, c.p0) == c.p0, "bullet zero" + at);
    out.expect(m.bullet(t, c.p1) == BlochState(0, 0, Rational(1) - Rational(2) * p(t)), "bullet one" + at);
    out.expect(p(m.bullet(t, s)) == p(t) * p(s), "p(bullet)" + at);
    out.expect(p(m.oplus(t, s)) == min(Rational(1), p(t) + p(s)), "p(oplus)" + at);
    out.expect(m.sqrt_op(m.neg(t)) == m.neg(m.sqrt_op(t)), "sqrt neg" + at);
    out.expect(m.sqrt_op(m.sqrt_op(t)) == m.neg(t), "sqrt sqrt" + at);
    out.expect(m.neg(s) == BlochState(s.r1(), -s.r2(), -s.r3()), "neg coords" + at);
    out.expect(m.sqrt_op(s) == BlochState(s.r1(), -s.r3(), s.r2()), "sqrt coords" + at);
    out.expect(m.probability(m.neg(s)) == (Rational(1) + s.r3()) / Rational(2), "p(neg)" + at);
    out.expect(m.probability(m.sqrt_op(s)) == (Rational(1) - s.r2()) / Rational(2), "p(sqrt)" + at);
    out.expect(p(m.sqrt_op(m.bullet(t, s))) == Rational(1, 2) && p(m.sqrt_op(m.oplus(t, s))) == Rational(1, 2),
               "p(sqrt of product)" + at);
  }
  out.detail = out.pass ? "monoid, unit, probability and sqrt laws on 1000 random rational states" : out.detail;
  return out;
}

Outcome threshold_forward() {
  Outcome out;
  const BlochModel m(16, 64);
  std::size_t states = 0;
  for (long i = -16; i <= 16; ++i)
    for (long j = -16; j <= 16; ++j) {
      const Rational r2(i, 16), r3(j, 16);
      if (r2 * r2 + r3 * r3 > Rational(1)) continue;
      ++states;
      const BlochState s(0, r2, r3);
      const Rational lhs = m.probability(s) / Rational(4) + m.probability(m.sqrt_op(s)) / Rational(4);
      out.expect(qsqrt2_cmp(QSqrt2(lhs), theta()) != std::strong_ordering::greater, "slice state " + s.str());
    }
  const Rational x(7, 10), y(99, 100);
  out.expect(below_threshold(x, y), "converse counterexample: linear bound should hold");
  out.expect(!disk_contains(x, y), "converse counterexample: point should lie outside the disk");
  if (out.pass) out.detail = std::to_string(states) + " slice states; (7/10, 99/100) bound holds, disk fails";
  return out;
}

Outcome disk_half_plane() {
  Outcome out;
  std::size_t inside = 0;
  for (long i = 0; i <= 64; ++i)
    for (long j = 0; j <= 64; ++j) {
      const Rational x(i, 64), y(j, 64);
      if (!disk_contains(x, y)) continue;
      ++inside;
      out.expect(below_threshold(x, y), "(" + x.str() + "," + y.str() + ")");
    }
  out.expect(inside > 0, "no grid point inside the disk");
  if (out.pass) out.detail = std::to_string(inside) + " of 4225 grid points in the disk, all below theta";
  return out;
}

Outcome phi_iso() {
  Outcome out;
  const BlochModel bloch(8, 64);
  const SquareRational disk = make_disk(8);
  const auto c = bloch_consts();
  Rng rng(404);
  for (int k = 0; k < 200; ++k) {
    const BlochState s = bloch.sample_slice(rng), t = bloch.sample_slice(rng);
    const std::string at = " at " + s.str() + " " + t.str();
    out.expect(phi(bloch.oplus(s, t)) == disk.oplus(phi(s), phi(t)), "oplus" + at);
    out.expect(phi(bloch.bullet(s, t)) == disk.bullet(phi(s), phi(t)), "bullet" + at);
    out.expect(phi(bloch.neg(s)) == disk.neg(phi(s)), "neg" + at);
    out.expect(phi(bloch.sqrt_op(s)) == disk.sqrt_op(phi(s)), "sqrt" + at);
    out.expect(phi_inv(phi(s)) == s, "phi_inv . phi" + at);
  }
  out.expect(phi(c.p0) == Pair<Rational>{0, Rational(1, 2)}, "phi(P0) = (0,1/2)");
  out.expect(phi(c.half) == Pair<Rational>{Rational(1, 2), Rational(1, 2)}, "phi(rho_1/2) = (1/2,1/2)");
  out.expect(phi(c.p1) == Pair<Rational>{1, Rational(1, 2)}, "phi(P1) = (1,1/2)");
  if (out.pass) out.detail = "200 slice-state pairs, 4 operations, 3 constants, inverse";
  return out;
}

Outcome octagon_suites() {
  Outcome out;
  const SquareDyadic oct = make_octagon(2);
  out.expect(oct.elements().size() == 13, "octagon over 1/4 should have 13 members");
  std::size_t checked = 0;
  for (const std::string suite : {"QMV", "SQMV", "SQPMV", "IP"}) {
    for (const auto& r : check_axiom_suite(oct, suite, SampleSource::exhaustive())) {
      checked += r.checked;
      out.expect(r.ok(), suite + ": " + r.line());
    }
  }
  out.expect(default_ip_witnesses().size() == 2, "IP witnesses should be {7/16, 55/128}");
  if (out.pass) out.detail = "QMV, SQMV, SQPMV, IP exhaustive on 13 members (" + std::to_string(checked) + " assignments)";
  return out;
}

Outcome preorder_law() {
  Outcome out;
  const SquareDyadic sq = make_square(3);
  const auto elems = sq.elements();
  for (const auto& x : elems)
    for (const auto& y : elems)
      out.expect(leq(sq, x, y) == (x.a <= y.a), "at " + sq.render(x) + " " + sq.render(y));
  if (out.pass) out.detail = std::to_string(elems.size() * elems.size()) + " pairs over the 1/8 chain";
  return out;
}

template <Model M>
void soundness_on(const M& m, const SoundnessConfig& cfg, Outcome& out, std::size_t& evals) {
  for (const auto& r : soundness_suite(all_schemas(), m, cfg)) {
    evals += r.checked;
    out.expect(r.ok(), m.name() + " " + r.line());
  }
}

Outcome soundness() {
  Outcome out;
  SoundnessConfig cfg;
  cfg.seed = 707;
  std::size_t evals = 0;
  soundness_on(make_octagon(6), cfg, out, evals);
  soundness_on(BlochModel(8, 64), cfg, out, evals);
  if (out.pass)
    out.detail = "20 schemata x 50 instances x 200 interpretations on octagon(1/64) and Bloch, MP on 500 triples each (" +
                 std::to_string(evals) + " evaluations)";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::size_t find_line(const std::vector<std::string>& lines, std::size_t k) {
  const std::string prefix = "  " + std::to_string(k) + ":";
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i].rfind(prefix, 0) == 0) return i;
  throw std::runtime_error("fixture has no line " + std::to_string(k));
}

struct Mutation {
  std::string name;
  std::string text;
  std::size_t line = 0;  // expected failing line; 0 accepts any
};

Mutation with_justification(const std::vector<std::string>& base, std::size_t k, const std::string& just) {
  auto lines = base;
  auto& l = lines[find_line(lines, k)];
  l = l.substr(0, l.rfind(';') + 1) + " " + just;
  return {"line " + std::to_string(k) + " -> " + just, join_lines(lines), k};
}

Mutation with_first_replaced(const std::vector<std::string>& base, std::size_t k, const std::string& from,
                             const std::string& to) {
  auto lines = base;
  auto& l = lines[find_line(lines, k)];
  const auto colon = l.find(':');
  l.replace(l.find(from, colon), from.size(), to);
  return {"line " + std::to_string(k) + " first " + from + " -> " + to, join_lines(lines), k};
}

Mutation with_goal(const std::vector<std::string>& base, const std::string& goal) {
  auto lines = base;
  for (auto& l : lines)
    if (l.rfind("goal:", 0) == 0) l = "goal: " + goal;
  return {"goal " + goal, join_lines(lines), 0};
}

Outcome proof_checker() {
  Outcome out;
  const std::string text = read_file(fixtures_dir + "/bullet_monotone.ipf");
  const auto report = check_proof(parse_script(text));
  out.expect(report.valid, "fixture: " + report.verdict());
  const auto base = split_lines(text);
  const std::vector<Mutation> mutations{
      with_justification(base, 4, "mp 2 4"),
      with_justification(base, 5, "mp 2 4"),
      with_justification(base, 7, "mp 4 6"),
      with_justification(base, 40, "mp 26 38"),
      with_justification(base, 43, "mp 7 44"),
      with_justification(base, 77, "mp 74 75"),
      with_justification(base, 1, "axiom P1"),
      with_justification(base, 2, "axiom P4"),
      with_justification(base, 6, "axiom W2"),
      with_justification(base, 8, "axiom W4"),
      with_justification(base, 12, "axiom W2"),
      with_first_replaced(base, 1, "x1", "x2"),
      with_first_replaced(base, 2, "x3", "x1"),
      with_first_replaced(base, 3, "x1", "x2"),
      with_first_replaced(base, 6, "x2", "x3"),
      with_first_replaced(base, 22, "x1", "x2"),
      with_goal(base, "(x1 -> x2) -> x3 * x1 -> x3 * x1"),
      with_goal(base, "(x2 -> x1) -> x3 * x1 -> x3 * x2"),
      with_goal(base, "(x1 -> x2) -> x1 * x3 -> x3 * x2"),
      with_goal(base, "x1 -> x2"),
  };
  for (const auto& mut : mutations) {
    const auto r = check_proof(parse_script(mut.text));
    out.expect(!r.valid, "mutation accepted: " + mut.name);
    out.expect(mut.line == 0 || r.failing_line == mut.line, "mutation " + mut.name + " failed elsewhere: " + r.verdict());
  }
  if (out.pass)
    out.detail = "fixture VALID (" + std::to_string(report.lines) + " lines); " + std::to_string(mutations.size()) +
                 " mutations INVALID";
  return out;
}

Outcome translation_semantics() {
  Outcome out;
  const SquareDyadic sq = make_square(6);
  const DyadicModel chain = make_dyadic_chain(6);
  Rng rng(909);
  for (int k = 0; k < 500; ++k) {
    const Term alpha = random_term(rng, TermShape{5, 3, true});
    FragmentValuation<Dyadic> v;
    for (unsigned i = 1; i <= 3; ++i) {
      v.vars.emplace(i, chain.sample(rng));
      v.roots.emplace(i, chain.sample(rng));
    }
    const auto lifted = evaluate_prob(alpha, sq, lift_valuation(v));
    const Dyadic direct = fragment_eval(translate_t(alpha), chain, v);
    out.expect(lifted.a == direct && lifted.b == Dyadic::half(), "term " + print(alpha));
  }
  if (out.pass) out.detail = "500 random terms of depth <= 5 under random 1/64 valuations";
  return out;
}

Outcome fraction_laws() {
  Outcome out;
  auto value = [](unsigned long a, unsigned long n) { return Rational(static_cast<long>(a), 1L << n); };
  for (unsigned long n = 0; n <= 5; ++n)
    for (unsigned long m = 0; m <= n; ++m)
      for (unsigned long a = 0; a <= (1UL << n); ++a)
        for (unsigned long b = 0; b <= (1UL << m); ++b) {
          const Term fa = frac_term({a, n}), fb = frac_term({b, m});
          const std::string at = " at a=" + std::to_string(a) + " n=" + std::to_string(n) + " b=" +
                                 std::to_string(b) + " m=" + std::to_string(m);
          const Rational sum = max(Rational(0), value(a, n) + value(b, m) - Rational(1));
          out.expect(const_eval(t_odot(fa, fb)).to_rational() == sum, "C4" + at);
          out.expect(const_eval(Term::bullet(fa, fb)).to_rational() == value(a, n) * value(b, m), "C5" + at);
          if (m == 0 && b == 0)
            out.expect(const_eval(Term::neg(fa)).to_rational() == Rational(1) - value(a, n), "C6" + at);
        }
  for (unsigned long n = 0; n <= 5; ++n)
    for (unsigned long a = 0; a <= (1UL << n); ++a) {
      const Dyadic x(a, n);
      const auto k = nilpotency_index(x);
      // Closed form max{0, ka - (k-1)2^n}, searched directly.
      std::optional<long> expected;
      for (long j = 1; j <= (1L << (n + 1)) && a < (1UL << n); ++j)
        if (j * static_cast<long>(a) - (j - 1) * (1L << n) <= 0) {
          expected = j;
          break;
        }
      const std::string at = " at " + x.str();
      out.expect(k.has_value() == expected.has_value(), "nilpotency existence" + at);
      if (k && expected) {
        out.expect(*k == *expected, "nilpotency index" + at);
        Dyadic power = x;
        for (long j = 1; j < *expected; ++j) power = dyadic_odot(power, x);
        out.expect(power.is_zero(), "k-th power" + at);
      }
    }
  if (out.pass) out.detail = "C4, C5, C6 for n, m <= 5; nilpotency for denominators <= 32";
  return out;
}

Outcome density() {
  Outcome out;
  Rng rng(1111);
  for (int k = 0; k < 100; ++k) {
    Rational a = sample_unit_rational(rng, 1000), b = sample_unit_rational(rng, 1000);
    while (a == b) b = sample_unit_rational(rng, 1000);
    if (b < a) std::swap(a, b);
    const Dyadic d = find_dyadic_between(a, b);
    out.expect(a < d.to_rational() && d.to_rational() < b, "(" + a.str() + ", " + b.str() + ") -> " + d.str());
  }
  if (out.pass) out.detail = "100 random rational intervals";
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

std::string run_capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + command);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return out + "[exit " + std::to_string(status) + "]\n";
}

std::string cli_matrix() {
  const std::string fixture = fixtures_dir + "/bullet_monotone.ipf";
  const std::vector<std::vector<std::string>> matrix{
      {"parse", "x1 <-> x1"},
      {"parse", "sqrt x1"},
      {"parse", "1/2"},
      {"eval", "--model", "bloch", "--assign", "x1=(0,0,1)", "sqrt(x1)"},
      {"eval", "--model", "square", "--assign", "x1=(3/4,1/4)", "x1 * 1"},
      {"eval", "--model", "disk", "--assign", "x1=(1,1)", "x1"},
      {"translate", "sqrt(sqrt(x1 + x2))"},
      {"taut", "--model", "octagon", "--denom", "6", "--random", "500", "--seed", "7", "x1 + !x1"},
      {"taut", "--model", "disk", "--grid", "2", "x1"},
      {"taut", "--model", "bloch", "--grid", "4", "--random", "300", "--seed", "3", "x1 * x2 -> x2"},
      {"suite", "--model", "octagon", "--denom", "2", "--suite", "SQMV"},
      {"suite", "--model", "disk", "--random", "200", "--seed", "11", "--suite", "QMV"},
      {"suite", "--model", "interval", "--suite", "SQMV"},
      {"check", fixture},
      {"search", "x1 -> x1"},
      {"search", "--hyp", "x2", "--hyp", "x2 -> x1", "x1"},
  };
  std::string out;
  for (const auto& args : matrix) {
    std::string command = quote(cli_path);
    for (const auto& a : args) command += " " + quote(a);
    out += "$ " + command + "\n" + run_capture(command + " 2>&1");
  }
  return out;
}

Outcome determinism() {
  Outcome out;
  const std::string first = cli_matrix();
  const std::string second = cli_matrix();
  out.expect(first == second, "CLI outputs differ between runs");
  out.expect(first.find("VALID\n") != std::string::npos, "matrix did not exercise the checker");
  if (out.pass) out.detail = "16 CLI invocations, " + std::to_string(first.size()) + " identical bytes twice";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  app.add_option("--cli", cli_path, "Path to the poincare executable")->required();
  app.add_option("--fixtures", fixtures_dir, "Fixture directory")->required();
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"gate-law suite", gate_laws},
      {"forward threshold implication", threshold_forward},
      {"disk in half-plane", disk_half_plane},
      {"phi isomorphism", phi_iso},
      {"equational brute force on the octagon", octagon_suites},
      {"S_A preorder law", preorder_law},
      {"soundness", soundness},
      {"proof checker", proof_checker},
      {"translation semantics", translation_semantics},
      {"fraction laws", fraction_laws},
      {"density", density},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " " << criteria[i].first << ": " << o.detail
              << " [" << ms << " ms]" << std::endl;
    failures += o.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
