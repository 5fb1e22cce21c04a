#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "metafib/bigint.hpp"

namespace metafib {

enum class DigitOrder { MostSignificantFirst, LeastSignificantFirst };

// Deterministic finite automaton with output over base-k digits.
struct Dfao {
  int base = 2;
  DigitOrder order = DigitOrder::MostSignificantFirst;
  std::vector<std::string> states;          // display names
  std::size_t initial = 0;
  std::vector<std::vector<std::size_t>> transitions;  // [state][digit]
  std::vector<std::int64_t> outputs;        // [state]

  std::size_t state_count() const { return states.size(); }

  // Throws std::invalid_argument unless both maps are total.
  void validate() const;

  bool operator==(const Dfao&) const = default;
};

// Feeds the canonical base-k digits of n (none for n = 0) in d.order.
std::int64_t run_dfao(const Dfao& d, std::uint64_t n);

// Two states, outputs +1 / -1, reads the most significant digit first.
Dfao ptm_dfao();

// Fourteen states generating r(2n) = h_{1,1}(2n) mod 2, least significant
// digit first.
Dfao r2n_dfao();

// h_{1,1}(n) mod m from
//   h(2n+1) = n + 1,   h(2n+2) = h(2n) + h(n+1)
// reduced mod m; grows on demand.
class HModTable {
 public:
  explicit HModTable(std::uint32_t modulus);

  std::uint32_t operator()(std::uint64_t n);
  void ensure(std::uint64_t n);
  std::uint32_t modulus() const { return modulus_; }

 private:
  std::uint32_t modulus_;
  std::vector<std::uint32_t> values_;
};

// r(n) = h_{1,1}(n) mod 2.
int r_direct(std::uint64_t n);

// r(8n+2) = 1 - r(8n), r(8n+6) = r(8n+4), r(32n) = r(16n),
// r(32n+16) = 1 - r(16n+8) for all n <= n_max.
bool check_r_relations(std::uint64_t n_max);

// r(8n+4) repeats 0,1,1,0 and r(16n+8) repeats 0,0,1,1 for n < n_bound.
bool check_r_periods(std::uint64_t n_bound);

using SymbolOracle = std::function<std::int64_t(std::uint64_t)>;

struct KernelDescriptor {
  int j = 0;            // the subsequence is (a(k^j n + i))_n
  std::uint64_t i = 0;  // 0 <= i < k^j
  bool operator==(const KernelDescriptor&) const = default;
};

struct KernelReport {
  int base = 2;
  std::size_t prefix_len = 0;
  std::vector<KernelDescriptor> discovered;             // BFS order
  std::vector<std::vector<KernelDescriptor>> classes;   // classes[c][0] is the representative
  bool closed = false;
  bool truncated = false;
  bool evidence_only = true;  // prefix equality does not prove equality

  std::size_t class_count() const { return classes.size(); }
};

// Breadth-first walk of the k-kernel from (0, 0), level by level with i
// ascending. Descriptors agreeing on the first prefix_len terms share a class.
KernelReport kernel_explore(const SymbolOracle& seq, int k, std::size_t prefix_len,
                            std::size_t max_classes);

struct RankProfile {
  std::size_t prefix_len = 0;
  std::vector<std::size_t> rank_by_depth;  // rank of the kernel up to level j
  bool stabilized = false;                 // last two ranks equal and below prefix_len
};

// Rank (mod 2^61 - 1) of the span of truncated kernel sequences, as evidence
// for or against k-regularity.
RankProfile kernel_rank_profile(const SymbolOracle& seq, int k, std::size_t prefix_len,
                                int max_depth);

// The increasing sequence of n with r(n) = bit, first count terms.
std::vector<std::uint64_t> r_level_positions(int bit, std::size_t count);

struct GrowthWitness {
  int exponent = 1;
  std::optional<Index> first;           // least n >= 1 with s(n) > n^C
  std::optional<Index> sustained_from;  // s(n) > n^C for every n in [this, n_max]
};

struct GrowthReport {
  Index a = 1;
  Index b = 1;
  Index n_max = 0;
  bool lower_bound_holds = false;
  std::optional<Index> first_violation;
  std::vector<GrowthWitness> witnesses;  // C = 1, 2, 4, 8
};

// For b = 1: s(n) = h(2n) against bin(n). For b >= 2: s(n) = h_{1,b}(2n+1)
// against bin(n+1).
GrowthReport growth_witness(Index a, Index b, Index n_max);

std::string to_dot(const Dfao& d, const std::string& name);

}  // namespace metafib
