// Acceptance gate: one PASS/FAIL line per criterion.
//
// A failure marked as known (a printed formula that the sequence does not
// satisfy) still prints FAIL but does not change the exit status.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "metafib/automata.hpp"
#include "metafib/classifier.hpp"
#include "metafib/closed_forms.hpp"
#include "metafib/partitions.hpp"
#include "metafib/recurrence.hpp"
#include "metafib/series.hpp"

using namespace metafib;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  bool unexpected = false;
  std::string detail;

  void fail(const std::string& why, bool known = false) {
    if (pass) detail = why;
    else detail += "; " + why;
    pass = false;
    unexpected = unexpected || !known;
  }
};

std::string s(Index n) { return std::to_string(n); }

Outcome first_terms() {
  static const long listing[] = {1, 1, 2,  2, 4,  3,  6,  4, 10, 5,  13, 6,  19,
                                 7, 23, 8, 33, 9, 38, 10, 51, 11, 57, 12, 76, 13};
  Outcome o;
  const auto table = eval_range(h_spec(1, 1), 25);
  const auto fast = h_fast_range(1, 1, 25);
  for (Index n = 0; n <= 25; ++n) {
    if (table.values[n] != listing[n]) o.fail("evaluator differs at n=" + s(n));
    if (fast[n] != listing[n]) o.fail("h_fast differs at n=" + s(n));
  }
  return o;
}

Outcome oracle_grid() {
  Outcome o;
  int pairs = 0;
  for (Index a = 1; a <= 8; ++a)
    for (Index b = 1; b <= 8; ++b) {
      if (h_fast_range(a, b, 10000) != eval_range(h_spec(a, b), 10000).values)
        o.fail("h_{" + s(a) + "," + s(b) + "}");
      if (g_fast_range(a, b, 10000) != eval_range(g_spec(a, b), 10000).values)
        o.fail("g_{" + s(a) + "," + s(b) + "}");
      pairs += 2;
    }
  if (pairs != 128) o.fail("ran " + s(pairs) + " pairs");
  return o;
}

Outcome identities() {
  Outcome o;
  if (!h_prefix_sum_check(1, 1, 10000)) o.fail("prefix sum");
  for (Index b = 2; b <= 10; ++b)
    if (!h_prefix_sum_check(1, b, 10000)) o.fail("sum form b=" + s(b));
  if (!check_F_recursion(8, 10000)) o.fail("F(k,2n)");
  if (!check_F_odd(8, 10000)) o.fail("F(k,2n+1)");
  for (int k = 0; k <= 6; ++k)
    for (Index n = 1; n <= 100; ++n)
      if (!check_ptm_identity(k, n)) o.fail("ptm identity k=" + s(k) + " n=" + s(n));
  for (int k = 1; k <= 10; ++k)
    for (int m = 0; m < k; ++m)
      if (!check_ptm_polynomial(k, m)) o.fail("ptm polynomial k=" + s(k) + " m=" + s(m));
  for (Index b = 2; b <= 10; ++b)
    if (!check_h1b_bin_link(b, 10000)) o.fail("bin link b=" + s(b));
  return o;
}

Outcome series() {
  Outcome o;
  if (!check_H_equation(1 << 12)) o.fail("H");
  for (Index b = 2; b <= 6; ++b)
    if (!check_Hb_equation(b, 1 << 10)) o.fail("H_b b=" + s(b));
  if (!check_G_algebraic(1 << 14)) o.fail("G");
  for (Index b = 2; b <= 6; ++b)
    if (!check_fb_algebraic(b, 1 << 12)) o.fail("f_b b=" + s(b));
  if (!bin_functional_residual(1 << 12).is_zero()) o.fail("(1-x)B(x)=B(x^2)");
  if (!ptm_bin_residual(1 << 12).is_zero()) o.fail("T B = 1");
  if (!decompose_H(1 << 12).ok) o.fail("decomposition");
  return o;
}

Outcome automata() {
  Outcome o;
  const Dfao r2n = r2n_dfao();
  for (std::uint64_t n = 0; n < (1u << 18); ++n)
    if (run_dfao(r2n, n) != r_direct(2 * n)) {
      o.fail("r(2n) automaton at n=" + std::to_string(n));
      break;
    }
  const Dfao t = ptm_dfao();
  for (std::uint64_t n = 0; n < (1u << 16); ++n)
    if (run_dfao(t, n) != ptm(static_cast<Index>(n))) {
      o.fail("PTM automaton at n=" + std::to_string(n));
      break;
    }
  if (!check_r_relations((1u << 15) - 1)) o.fail("r relations");
  if (!check_r_periods(1u << 15)) o.fail("r periods");
  return o;
}

Outcome growth() {
  Outcome o;
  const auto rep = growth_witness(1, 1, 1 << 12);
  if (!rep.lower_bound_holds) o.fail("h(2n) < bin(n) at n=" + s(rep.first_violation.value_or(-1)));
  std::string found;
  for (const auto& w : rep.witnesses) {
    if (!w.first || *w.first > (1 << 12))
      o.fail("no witness for C=" + std::to_string(w.exponent));
    else
      found += " C=" + std::to_string(w.exponent) + ":n=" + s(*w.first) + " (sustained from " +
               (w.sustained_from ? s(*w.sustained_from) : std::string("-")) + ")";
  }
  if (o.pass) o.detail = "witnesses" + found;
  return o;
}

Outcome generalized() {
  Outcome o;
  const auto r = u1v3_probe(36000);
  auto law = [&](const LawCheck& c, Index from, Index to, const std::string& name) {
    if (c.from > from || c.to < to) o.fail(name + " not checked on the full range");
    if (c.first_failure && *c.first_failure <= to) o.fail(name + " fails at n=" + s(*c.first_failure));
  };
  law(r.class2, 120, 5000, "f(3n+2)=n+19162");
  law(r.class1, 9673, 12000, "f(3n+1)=n+29871990902013037527");
  law(r.sum_printed, 30, 5000, "summation law");

  for (Index a = 1; a <= 6; ++a)
    for (Index b = 1; b <= 8; ++b) {
      const auto it = u2v1_item(a, b);
      if (it.item == 0 || it.holds) continue;
      const bool known = it.item == 3 && b == 2 && it.fit.difference == 2 && sgn(it.fit.offset) == 0;
      o.fail("item (" + std::to_string(it.item) + ") a=" + s(a) + " b=" + s(b) + ": observed f(n)=" +
             to_decimal(it.fit.difference) + "n" + (sgn(it.fit.offset) < 0 ? "" : "+") +
             to_decimal(it.fit.offset),
             known);
    }
  return o;
}

Outcome kernels() {
  Outcome o;
  const auto t = kernel_explore([](std::uint64_t n) { return std::int64_t(ptm(Index(n)) > 0); }, 2,
                                1 << 12, 16);
  if (!t.closed || t.class_count() != 2) o.fail("PTM kernel: " + s(Index(t.class_count())) + " classes");
  const auto r = kernel_explore([](std::uint64_t n) { return r_direct(n); }, 2, 1 << 14, 64);
  if (!r.closed) o.fail("r kernel did not close within 64 classes");
  HModTable h3(3);
  const auto h = kernel_explore([&h3](std::uint64_t n) { return std::int64_t(h3(n)); }, 2, 1 << 14, 200);
  if (!h.truncated) o.fail("h mod 3 kernel closed with " + s(Index(h.class_count())) + " classes");
  if (o.pass)
    o.detail = "PTM 2 classes, r " + s(Index(r.class_count())) + " classes, h mod 3 > 200";
  return o;
}

Outcome soundness() {
  Outcome o;
  const auto rep = synthetic_soundness(1000, 20240917);
  if (rep.recovered != rep.cases)
    o.fail(s(Index(rep.cases - rep.recovered)) + " of 1000 not recovered");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;  // 0: untimed
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "first 26 terms of h_{1,1}", 1.0, first_terms},
      {2, "closed forms equal the evaluator, a,b<=8, n<=10^4", 30.0, oracle_grid},
      {3, "prefix sums, PTM relations, bin link", 0.0, identities},
      {4, "functional equations and decomposition", 0.0, series},
      {5, "automata and r relations", 0.0, automata},
      {6, "h(2n) >= bin(n) and polynomial witnesses", 0.0, growth},
      {7, "u=1,v=3 constants and u=2,v=1 list", 120.0, generalized},
      {8, "kernel evidence", 0.0, kernels},
      {9, "detector soundness on 1000 planted laws", 0.0, soundness},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "took %.2f s, limit %.0f s", secs, c.limit_s);
      o.fail(buf);
    }
    std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    if (o.unexpected)
      ++unexpected;
    else if (!o.pass)
      std::printf("criterion %d: known discrepancy in the printed statement, not counted\n", c.id);
  }
  std::fflush(stdout);
  return unexpected == 0 ? 0 : 1;
}
