#include "metafib/classifier.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace metafib {

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::EventuallyConstant: return "eventually-constant";
    case VerdictKind::EventuallyAP: return "eventually-ap";
    case VerdictKind::LinearRecurrence: return "linear-recurrence";
    case VerdictKind::Dead: return "dead";
    case VerdictKind::Unclassified: return "unclassified";
  }
  return "?";
}

std::optional<ApFit> detect_eventual_ap(std::span<const BigInt> values, Index min_tail) {
  if (min_tail < 1 || static_cast<Index>(values.size()) < min_tail + 2)
    throw std::invalid_argument("detect_eventual_ap: need at least min_tail + 2 values");
  const Index L = static_cast<Index>(values.size());
  const BigInt diff = values[L - 1] - values[L - 2];
  Index start = L - 2;
  while (start > 0 && values[start] - values[start - 1] == diff) --start;
  if (L - start < min_tail) return std::nullopt;
  return ApFit{start, diff, values[start] - diff * start};
}

namespace {

using Row = std::vector<mpq_class>;

// Reduced row echelon form of rows with r unknowns plus a right-hand side
// column. Returns nullopt when inconsistent, else one solution (free
// variables set to 0) and the rank.
std::optional<std::pair<std::vector<mpq_class>, int>> solve(std::vector<Row> m, int r) {
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < r && rank < static_cast<int>(m.size()); ++col) {
    int p = -1;
    for (int i = rank; i < static_cast<int>(m.size()); ++i)
      if (sgn(m[i][col]) != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[rank], m[p]);
    const mpq_class inv = 1 / m[rank][col];
    for (int j = col; j <= r; ++j) m[rank][j] *= inv;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == rank || sgn(m[i][col]) == 0) continue;
      const mpq_class f = m[i][col];
      for (int j = col; j <= r; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int i = rank; i < static_cast<int>(m.size()); ++i)
    if (sgn(m[i][r]) != 0) return std::nullopt;
  std::vector<mpq_class> x(r, 0);
  for (int i = 0; i < rank; ++i) x[pivot_col[i]] = m[i][r];
  return std::make_pair(std::move(x), rank);
}

bool law_at(std::span<const BigInt> s, Index n, const std::vector<BigInt>& c, const BigInt& den) {
  BigInt acc = 0;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (sgn(c[j]) != 0) mpz_addmul(acc.get_mpz_t(), c[j].get_mpz_t(), s[n - 1 - j].get_mpz_t());
  return acc == den * s[n];
}

std::vector<Row> equations(std::span<const BigInt> s, Index from, Index to, int r) {
  std::vector<Row> rows;
  for (Index n = from; n < to; ++n) {
    Row row(r + 1);
    for (int j = 0; j < r; ++j) row[j] = s[n - 1 - j];
    row[r] = s[n];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::optional<LinearFit> detect_linear_recurrence(std::span<const BigInt> values, int max_order,
                                                  Index window) {
  if (max_order < 1 || window < 4 * static_cast<Index>(max_order) ||
      static_cast<Index>(values.size()) < window)
    throw std::invalid_argument("detect_linear_recurrence: need window >= 4*max_order <= size");
  const Index L = static_cast<Index>(values.size());
  const Index lo = L - window;
  for (int r = 1; r <= max_order; ++r) {
    // A small square-ish system usually pins the coefficients; fall back to
    // the full window only when it does not.
    auto sol = solve(equations(values, lo + r, std::min(L, lo + 3 * r), r), r);
    if (!sol) continue;
    if (sol->second < r) {
      sol = solve(equations(values, lo + r, L, r), r);
      if (!sol) continue;
    }
    BigInt den = 1;
    for (const auto& q : sol->first) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<BigInt> coeffs;
    for (const auto& q : sol->first) coeffs.push_back(q.get_num() * (den / q.get_den()));
    bool ok = true;
    for (Index n = lo + r; n < L && ok; ++n) ok = law_at(values, n, coeffs, den);
    if (!ok) continue;
    Index first = lo + r;
    while (first > r && law_at(values, first - 1, coeffs, den)) --first;
    return LinearFit{std::move(coeffs), den, first - r};
  }
  return std::nullopt;
}

bool replay(std::span<const BigInt> values, const Verdict& v) {
  const Index L = static_cast<Index>(values.size());
  switch (v.kind) {
    case VerdictKind::EventuallyConstant:
    case VerdictKind::EventuallyAP:
      for (Index n = v.start; n < L; ++n)
        if (values[n] != v.offset + v.difference * n) return false;
      return true;
    case VerdictKind::LinearRecurrence:
      if (v.coeffs.empty() || sgn(v.denominator) == 0) return false;
      for (Index n = v.start + static_cast<Index>(v.order()); n < L; ++n)
        if (!law_at(values, n, v.coeffs, v.denominator)) return false;
      return true;
    case VerdictKind::Dead:
    case VerdictKind::Unclassified:
      return true;
  }
  return false;
}

namespace {

Verdict classify_class(std::span<const BigInt> s, const ClassifyOptions& o, Index window) {
  Verdict v;
  const Index L = static_cast<Index>(s.size());
  if (L >= o.min_tail + 2) {
    if (auto ap = detect_eventual_ap(s, o.min_tail)) {
      v.kind = sgn(ap->difference) == 0 ? VerdictKind::EventuallyConstant : VerdictKind::EventuallyAP;
      v.start = ap->start;
      v.difference = ap->difference;
      v.offset = ap->offset;
    }
  }
  if (v.kind == VerdictKind::Unclassified && L >= window) {
    if (auto lr = detect_linear_recurrence(s, o.max_order, window)) {
      v.kind = VerdictKind::LinearRecurrence;
      v.start = lr->start;
      v.coeffs = std::move(lr->coeffs);
      v.denominator = lr->denominator;
    }
  }
  if (v.kind == VerdictKind::Unclassified || !replay(s, v)) return Verdict{};
  v.witness_window = L - v.start;
  return v;
}

}  // namespace

ClassificationReport classify_table(const SequenceTable& table, Index split_modulus,
                                    const ClassifyOptions& opts) {
  if (split_modulus < 1) throw std::invalid_argument("classify: split modulus must be >= 1");
  if (opts.max_order < 1 || opts.min_tail < 1)
    throw std::invalid_argument("classify: max_order and min_tail must be >= 1");
  const Index window = opts.window > 0 ? opts.window : 8 * static_cast<Index>(opts.max_order);
  if (window < 4 * static_cast<Index>(opts.max_order))
    throw std::invalid_argument("classify: window must be >= 4*max_order");
  ClassificationReport rep{table.spec, split_modulus, table.n_max, {}};
  for (Index e = 0; e < split_modulus; ++e) {
    if (!table.complete()) {
      Verdict v;
      v.kind = VerdictKind::Dead;
      v.died_at = table.failure->at;
      rep.verdicts.push_back(std::move(v));
      continue;
    }
    const auto s = subsequence(table, split_modulus, e);
    rep.verdicts.push_back(classify_class(s, opts, window));
  }
  return rep;
}

ClassificationReport classify(const RecurrenceSpec& spec, Index split_modulus, Index n_max,
                              const ClassifyOptions& opts) {
  return classify_table(eval_range(spec, n_max), split_modulus, opts);
}

RecurrenceSpec u1v3_spec() { return meta_spec(1, 3, {1, 1}, NegConstant{1}); }

namespace {

LawCheck class_law(const SequenceTable& t, Index residue, Index from, const BigInt& offset) {
  LawCheck c{from, (static_cast<Index>(t.size()) - 1 - residue) / 3, {}};
  for (Index n = from; n <= c.to; ++n)
    if (t[3 * n + residue] != offset + n) { c.first_failure = n; break; }
  return c;
}

LawCheck sum_law(const SequenceTable& t, Index shift, Index from) {
  LawCheck c{from, (static_cast<Index>(t.size()) - 1) / 3, {}};
  BigInt acc = 211;
  for (Index n = 1; n <= c.to; ++n) {
    const Index j = 2 * n - shift;
    acc += j < 0 ? BigInt(1) : t[j];
    if (n >= from && t[3 * n] != acc) { c.first_failure = n; break; }
  }
  return c;
}

}  // namespace

U1V3Report u1v3_probe(Index n_max) {
  const Index hi = std::max<Index>(n_max, 36002);
  const auto table = eval_range(u1v3_spec(), hi);
  if (!table.complete()) throw std::runtime_error("u1v3_probe: sequence died");
  U1V3Report r;
  r.n_max = hi;
  r.report = classify_table(table, 3);
  r.class2 = class_law(table, 2, 120, BigInt(19162));
  r.class1 = class_law(table, 1, 9673, BigInt("29871990902013037527"));
  r.sum_printed = sum_law(table, 19162, 30);
  r.sum_shifted = sum_law(table, 19161, 30);
  return r;
}

U2V1Item u2v1_item(Index a, Index b, Index n_max) {
  if (a < 1 || b < 1) throw std::invalid_argument("u2v1_item: a, b must be >= 1");
  if (n_max < 70) throw std::invalid_argument("u2v1_item: n_max must be >= 70");
  const auto t = eval_range(meta_spec(2, 1, {a, b}, NegConstant{a}), n_max);
  if (!t.complete()) throw std::runtime_error("u2v1_item: sequence died");
  U2V1Item it;
  it.a = a;
  it.b = b;
  it.fit = detect_eventual_ap(t.values, 64).value_or(ApFit{});
  if (a == 1 && b <= 2) {
    it.item = 1;
    it.slope = 1;
    it.offset = b + 1;
  } else if (a == 1) {
    it.item = 2;
    it.formula_printed = false;
    it.slope = 1;
    it.offset = t[4] - 4;
  } else if (a == 2 && b <= 2) {
    it.item = 3;
    it.slope = 2;
    it.offset = -b;
  } else if (b >= 3) {
    it.item = 4;
    it.slope = a;
    it.offset = b - a;
  } else {
    it.formula_printed = false;
    it.slope = it.fit.difference;
    it.offset = it.fit.offset;
  }
  it.holds = true;
  for (Index n = 4; n <= n_max && it.holds; ++n) it.holds = t[n] == it.slope * n + it.offset;
  return it;
}

namespace {

bool recover_one(std::mt19937_64& rng) {
  auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const Index pre = uni(0, 32);
  const Index tail = 160;
  std::vector<BigInt> s;
  for (Index i = 0; i < pre; ++i) s.emplace_back(uni(-1000, 1000));

  if (uni(0, 1) == 0) {
    const BigInt diff = uni(-50, 50);
    const BigInt first = uni(-1000, 1000);
    for (Index n = 0; n < tail; ++n) s.push_back(first + diff * n);
    const auto fit = detect_eventual_ap(s, 64);
    return fit && fit->start <= pre && fit->difference == diff &&
           fit->offset + diff * pre == s[pre];
  }

  const int r = static_cast<int>(uni(1, 4));
  std::vector<BigInt> c(r);
  for (auto& x : c) x = uni(-3, 3);
  if (sgn(c[r - 1]) == 0) c[r - 1] = uni(0, 1) ? 1 : -1;
  bool nonzero = false;
  for (int i = 0; i < r; ++i) {
    s.emplace_back(uni(-9, 9));
    nonzero = nonzero || sgn(s.back()) != 0;
  }
  if (!nonzero) s.back() = 1;
  while (static_cast<Index>(s.size()) < pre + tail) {
    BigInt next = 0;
    for (int j = 0; j < r; ++j) next += c[j] * s[s.size() - 1 - j];
    s.push_back(next);
  }
  const auto fit = detect_linear_recurrence(s, 4, 64);
  if (!fit || fit->coeffs.size() > static_cast<std::size_t>(r)) return false;
  Verdict v;
  v.kind = VerdictKind::LinearRecurrence;
  v.start = fit->start;
  v.coeffs = fit->coeffs;
  v.denominator = fit->denominator;
  if (!replay(s, v)) return false;
  if (fit->coeffs.size() == static_cast<std::size_t>(r))
    return fit->start <= pre && fit->denominator == 1 && fit->coeffs == c;
  return fit->start <= pre + r;
}

}  // namespace

SoundnessReport synthetic_soundness(std::size_t cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SoundnessReport rep{cases, 0, {}};
  for (std::size_t i = 0; i < cases; ++i) {
    if (recover_one(rng))
      ++rep.recovered;
    else if (!rep.first_failure)
      rep.first_failure = i;
  }
  return rep;
}

}  // namespace metafib
