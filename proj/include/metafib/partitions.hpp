#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "metafib/bigint.hpp"

namespace metafib {

// bin(n): number of partitions of n into powers of two.
struct BinTable {
  std::vector<BigInt> values;  // bin(0..n_max)

  const BigInt& operator[](std::size_t n) const { return values[n]; }
  std::size_t size() const { return values.size(); }
};

BinTable bin_table(Index n_max);

// Prouhet-Thue-Morse sign: +1 for an even binary digit sum, -1 otherwise.
int ptm(Index n);

// F(k, n) = sum_{i < 2^k} t_i h(n - 2i), defined for n >= 2^(k+1) - 2.
// h must cover index n. Throws std::invalid_argument outside the domain.
BigInt ptm_sum(int k, Index n, std::span<const BigInt> h);

// F(k, 2n) = F(k-1, n) for 1 <= k <= k_max and every n <= n_max where both
// sides are defined.
bool check_F_recursion(int k_max, Index n_max);

// F(0, 2n+1) = n+1, F(1, 2n+1) = 1 and F(k, 2n+1) = 0 for k >= 2, for
// 0 <= k <= k_max and admissible 2n+1 <= 2 n_max + 1.
bool check_F_odd(int k_max, Index n_max);

// sum_{i < 2^k} t_i h(2^(k+1) n + 2^k - 2i) = n + 1
bool check_ptm_identity(int k, Index n);

// sum_{i < 2^k} t_i i^m = 0, claimed for 0 <= m < k.
bool check_ptm_polynomial(int k, int m);

// h_{1,b}(2n+1) = (b-2) bin(n+1) + h_{1,1}(2n+2) for n <= n_max; for b = 2
// additionally h_{1,2}(n) = h_{1,1}(n+1).
bool check_h1b_bin_link(Index b, Index n_max);

struct MahlerPoint {
  int k = 0;
  std::size_t bits = 0;  // bit length of bin(2^k)
  double ratio = 0.0;    // bits / (k^2 / 2), rounded to 3 decimals
};

// Informational trend of log2 bin(2^k) against (log2 2^k)^2 / 2.
std::vector<MahlerPoint> mahler_trend_report(int k_min, int k_max);

// CSV with header "n,bin", LF line endings.
void write_bin_csv(std::ostream& out, const BinTable& table);

}  // namespace metafib
