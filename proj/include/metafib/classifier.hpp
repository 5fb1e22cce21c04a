#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metafib/bigint.hpp"
#include "metafib/recurrence.hpp"

namespace metafib {

enum class VerdictKind { EventuallyConstant, EventuallyAP, LinearRecurrence, Dead, Unclassified };

std::string to_string(VerdictKind kind);

// A law confirmed on the observed window of one subsequence s(0), s(1), ...
struct Verdict {
  VerdictKind kind = VerdictKind::Unclassified;
  Index start = 0;  // subsequence index from which the law holds
  // constant / AP: s(n) = offset + difference * n for n >= start
  BigInt difference = 0;
  BigInt offset = 0;
  // linear recurrence: denominator * s(n) = sum_j coeffs[j-1] * s(n-j),
  // for n >= start + order
  std::vector<BigInt> coeffs;
  BigInt denominator = 1;
  Index witness_window = 0;  // number of terms from start to the end of the table
  // Dead: original index at which the table stopped
  std::optional<Index> died_at;

  std::size_t order() const { return coeffs.size(); }
};

struct ClassificationReport {
  RecurrenceSpec spec;
  Index modulus = 1;
  Index n_max = 0;
  std::vector<Verdict> verdicts;  // one per residue class
};

struct ApFit {
  Index start = 0;
  BigInt difference = 0;
  BigInt offset = 0;  // s(n) = offset + difference * n from start on
};

// Least start from which first differences are constant to the end, provided
// at least min_tail terms lie in that stretch.
std::optional<ApFit> detect_eventual_ap(std::span<const BigInt> values, Index min_tail);

struct LinearFit {
  std::vector<BigInt> coeffs;  // c_1 .. c_r
  BigInt denominator = 1;
  Index start = 0;  // earliest index whose r seeds regenerate the rest
};

// Minimal-order exact recurrence (order <= max_order) reproducing the last
// `window` terms, found by exact rational elimination on the Hankel-type
// system, then replayed backwards to find its onset.
std::optional<LinearFit> detect_linear_recurrence(std::span<const BigInt> values, int max_order,
                                                  Index window);

// True iff the verdict's law regenerates values[start..] exactly.
bool replay(std::span<const BigInt> values, const Verdict& v);

struct ClassifyOptions {
  Index min_tail = 64;
  int max_order = 16;
  Index window = 0;  // 0 selects 8 * max_order
};

ClassificationReport classify_table(const SequenceTable& table, Index split_modulus,
                                    const ClassifyOptions& opts = {});
ClassificationReport classify(const RecurrenceSpec& spec, Index split_modulus, Index n_max,
                              const ClassifyOptions& opts = {});

struct LawCheck {
  Index from = 0;
  Index to = 0;  // last index checked
  std::optional<Index> first_failure;
  bool holds() const { return !first_failure.has_value(); }
};

// u = 1, v = 3, f(n) = 1 for n <= 1.
RecurrenceSpec u1v3_spec();

struct U1V3Report {
  Index n_max = 0;
  ClassificationReport report;  // split 3
  LawCheck class2;              // f(3n+2) = n + 19162, n >= 120
  LawCheck class1;              // f(3n+1) = n + 29871990902013037527, n >= 9673
  LawCheck sum_printed;         // f(3n) = 211 + sum_{i=1}^n f(2i - 19162), n >= 30
  LawCheck sum_shifted;         // same with f(2i - 19161)
};

// Builds the table through max(n_max, 36002) and checks the reported laws.
U1V3Report u1v3_probe(Index n_max);

// u = 2, v = 1, f(n) = a for n <= 0, f(1) = b.
struct U2V1Item {
  Index a = 1;
  Index b = 1;
  int item = 0;                 // 1..4 when a printed case applies, 0 otherwise
  bool formula_printed = true;  // false for the case whose printed offset is not usable
  BigInt slope = 0;             // expected law f(n) = slope * n + offset for n >= 4
  BigInt offset = 0;
  bool holds = false;           // law holds for 4 <= n <= n_max
  ApFit fit;                    // detected eventual AP of the whole sequence
};

U2V1Item u2v1_item(Index a, Index b, Index n_max = 256);

// Random APs and order <= 4 integer recurrences behind random preambles of
// length <= 32; a case counts as recovered when the detectors return the
// planted law (or a lower-order law that replays) with onset no later than
// the planted one.
struct SoundnessReport {
  std::size_t cases = 0;
  std::size_t recovered = 0;
  std::optional<std::size_t> first_failure;  // case number
};

SoundnessReport synthetic_soundness(std::size_t cases, std::uint64_t seed);

}  // namespace metafib
