#pragma once

// Exact evaluation of nested (meta-Fibonacci) recurrences
//
//   f(n) = sum over terms, where each term is either
//     Shift{v}      -> f(n - v)
//     Nested{d, u}  -> f(n - d - f(n - u))
//
// Indices start at 0. f(0..k-1) are the initial values; the recurrence
// applies for n >= k. References to negative indices either yield a fixed
// constant or stop the evaluation ("the sequence dies").

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "metafib/bigint.hpp"

namespace metafib {

struct Shift {
  Index v = 1;
  bool operator==(const Shift&) const = default;
};

struct Nested {
  Index d = 0;
  Index u = 1;
  bool operator==(const Nested&) const = default;
};

using Term = std::variant<Shift, Nested>;

struct NegConstant {
  BigInt c;
  bool operator==(const NegConstant& o) const { return c == o.c; }
};

struct NegStrict {
  bool operator==(const NegStrict&) const = default;
};

using NegMode = std::variant<NegConstant, NegStrict>;

struct RecurrenceSpec {
  std::vector<Term> terms;
  std::vector<BigInt> init;  // f(0), ..., f(k-1)
  NegMode neg = NegStrict{};

  // First index computed by the recurrence.
  Index start() const { return static_cast<Index>(init.size()); }

  // Throws std::invalid_argument when the spec is unusable.
  void validate() const;

  bool operator==(const RecurrenceSpec&) const = default;
};

enum class FailureKind { Died, NonWellFounded };

std::string to_string(FailureKind kind);

struct Failure {
  FailureKind kind = FailureKind::Died;
  Index at = 0;  // index whose evaluation failed
  bool operator==(const Failure&) const = default;
};

struct SequenceTable {
  RecurrenceSpec spec;
  Index n_max = 0;
  std::vector<BigInt> values;      // indices 0 .. values.size()-1
  std::optional<Failure> failure;  // set iff values.size() < n_max + 1

  bool complete() const { return !failure.has_value(); }
  std::optional<Index> death() const {
    return failure ? std::optional<Index>(failure->at) : std::nullopt;
  }
  const BigInt& operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const { return values.size(); }
};

SequenceTable eval_range(const RecurrenceSpec& spec, Index n_max);

using EvalResult = std::variant<BigInt, Failure>;

EvalResult eval(const RecurrenceSpec& spec, Index n);

// (values[modulus*n + residue]) for every in-range n.
std::vector<BigInt> subsequence(const SequenceTable& table, Index modulus, Index residue);
std::vector<BigInt> subsequence(std::span<const BigInt> values, Index modulus, Index residue);

// f(n) = f(n - f(n-u)) + f(n - v) with the given initial values and negative-index rule.
RecurrenceSpec meta_spec(Index u, Index v, std::vector<BigInt> init, NegMode neg);

// h_{a,b}: h(n) = a for n <= 0, h(1) = b, h(n) = h(n - h(n-1)) + h(n-2).
RecurrenceSpec h_spec(Index a, Index b);

// g_{a,b}: as h_{a,b} but g(n) = 0 for n < 0.
RecurrenceSpec g_spec(Index a, Index b);

}  // namespace metafib
