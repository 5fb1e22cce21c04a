#pragma once

// Closed forms and simplified recurrences for h_{a,b} and g_{a,b}.
//
// Every (family, a, b) falls in exactly one CaseTag. Cases with an O(1)
// formula are evaluated directly; cases governed by a linear recurrence are
// served from a per-thread memo table that grows on demand.

#include <string>
#include <vector>

#include "metafib/bigint.hpp"

namespace metafib {

enum class Family { H, G };

struct FamilyParams {
  Index a = 1;
  Index b = 1;
  Family family = Family::H;
};

enum class CaseTag {
  H11,
  H1b,
  Ha_b_both_ge2,
  Ha1_a_ge3,
  H21,
  G_a_ge_b_ge2,
  G_b_ge_a_ge2,
  G_a_ge3_b1,
  G_a1_b_ge3,
  G11,
  G12,
  G21,
};

std::string to_string(CaseTag tag);
std::string to_string(Family family);

CaseTag classify_params(const FamilyParams& p);

BigInt h_fast(Index a, Index b, Index n);
BigInt g_fast(Index a, Index b, Index n);

// Values 0..n_max in one pass.
std::vector<BigInt> h_fast_range(Index a, Index b, Index n_max);
std::vector<BigInt> g_fast_range(Index a, Index b, Index n_max);

// h_{1,1}(2n) = sum_{i<=n} h_{1,1}(i), or for b >= 2
// h_{1,b}(2n+1) = b - 1 + sum_{i<=n} h_{1,b}(i); checked for n <= n_max.
bool h_prefix_sum_check(Index a, Index b, Index n_max);

// For a > b >= 2: g_{b,a}(n+1) = g_{a,b}(n) if b is even,
// g_{b,a}(n) = g_{a,b}(n+1) if b is odd; checked for n <= n_max.
bool g_shift_check(Index a, Index b, Index n_max);

// Seeds of the three sporadic g cases, frozen from the general evaluator.
const std::vector<long>& g_sporadic_seed(CaseTag tag);

}  // namespace metafib
