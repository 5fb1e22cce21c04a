#include "metafib/partitions.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "metafib/closed_forms.hpp"

namespace metafib {

BinTable bin_table(Index n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  BinTable t;
  auto& v = t.values;
  v.reserve(static_cast<std::size_t>(n_max) + 1);
  v.emplace_back(1);
  for (Index n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (n % 2 == 0)
      v.push_back(v[i - 1] + v[i / 2]);
    else
      v.push_back(v[i - 1]);
  }
  return t;
}

int ptm(Index n) {
  if (n < 0) throw std::invalid_argument("ptm index must be >= 0");
  return std::popcount(static_cast<std::uint64_t>(n)) % 2 == 0 ? 1 : -1;
}

BigInt ptm_sum(int k, Index n, std::span<const BigInt> h) {
  if (k < 0 || k > 40) throw std::invalid_argument("k out of range");
  const Index terms = Index{1} << k;
  if (n < 2 * terms - 2)
    throw std::invalid_argument("F(" + std::to_string(k) + ", " + std::to_string(n) +
                                ") requires n >= 2^(k+1) - 2");
  if (n >= static_cast<Index>(h.size()))
    throw std::invalid_argument("h table does not cover index " + std::to_string(n));
  BigInt sum = 0;
  for (Index i = 0; i < terms; ++i) {
    const auto& term = h[static_cast<std::size_t>(n - 2 * i)];
    if (ptm(i) > 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

bool check_F_recursion(int k_max, Index n_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  const auto h = h_fast_range(1, 1, 2 * n_max + 1);
  for (int k = 1; k <= k_max; ++k) {
    // F(k, 2n) needs n >= 2^k - 1; F(k-1, n) needs n >= 2^k - 2.
    for (Index n = (Index{1} << k) - 1; n <= n_max; ++n) {
      if (ptm_sum(k, 2 * n, h) != ptm_sum(k - 1, n, h)) return false;
    }
  }
  return true;
}

bool check_F_odd(int k_max, Index n_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  const auto h = h_fast_range(1, 1, 2 * n_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    for (Index n = 0; n <= n_max; ++n) {
      if (2 * n + 1 < (Index{2} << k) - 2) continue;
      const BigInt f = ptm_sum(k, 2 * n + 1, h);
      const BigInt expected = k == 0 ? from_index(n + 1) : BigInt(k == 1 ? 1 : 0);
      if (f != expected) return false;
    }
  }
  return true;
}

bool check_ptm_identity(int k, Index n) {
  if (k < 0 || k > 40) throw std::invalid_argument("k out of range");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const Index terms = Index{1} << k;
  const Index top = 2 * terms * n + terms;
  BigInt sum = 0;
  for (Index i = 0; i < terms; ++i) {
    const BigInt v = h_fast(1, 1, top - 2 * i);
    if (ptm(i) > 0)
      sum += v;
    else
      sum -= v;
  }
  return sum == n + 1;
}

bool check_ptm_polynomial(int k, int m) {
  if (m < 0 || m >= k) throw std::invalid_argument("identity is claimed only for 0 <= m < k");
  if (k > 40) throw std::invalid_argument("k out of range");
  BigInt sum = 0, p;
  for (Index i = 0; i < (Index{1} << k); ++i) {
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
    if (ptm(i) > 0)
      sum += p;
    else
      sum -= p;
  }
  return sgn(sum) == 0;
}

bool check_h1b_bin_link(Index b, Index n_max) {
  if (b < 2) throw std::invalid_argument("link identity needs b >= 2");
  if (n_max < 0) return true;
  const auto hb = h_fast_range(1, b, 2 * n_max + 1);
  const auto h = h_fast_range(1, 1, 2 * n_max + 2);
  const auto bin = bin_table(n_max + 1);
  for (Index n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (hb[2 * i + 1] != (b - 2) * bin[i + 1] + h[2 * i + 2]) return false;
  }
  if (b == 2) {
    for (std::size_t n = 0; n < hb.size(); ++n)
      if (hb[n] != h[n + 1]) return false;
  }
  return true;
}

std::vector<MahlerPoint> mahler_trend_report(int k_min, int k_max) {
  if (!(4 <= k_min && k_min <= k_max && k_max <= 20))
    throw std::invalid_argument("need 4 <= k_min <= k_max <= 20");
  const auto bin = bin_table(Index{1} << k_max);
  std::vector<MahlerPoint> out;
  for (int k = k_min; k <= k_max; ++k) {
    MahlerPoint p;
    p.k = k;
    p.bits = bit_length(bin[std::size_t{1} << k]);
    const double raw = static_cast<double>(p.bits) / (k * k / 2.0);
    p.ratio = std::round(raw * 1000.0) / 1000.0;
    out.push_back(p);
  }
  return out;
}

void write_bin_csv(std::ostream& out, const BinTable& table) {
  out << "n,bin\n";
  for (std::size_t n = 0; n < table.size(); ++n) out << n << ',' << to_decimal(table[n]) << '\n';
}

}  // namespace metafib
