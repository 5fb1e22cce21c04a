#pragma once

// Slow, direct re-implementations used as test oracles. They share no code
// with the library, and use boost's cpp_int instead of GMP.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metafib/bigint.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_int;

inline std::string dec(const Big& x) { return x.str(); }
inline bool same(const metafib::BigInt& a, const Big& b) { return metafib::to_decimal(a) == b.str(); }

inline bool same(const std::vector<metafib::BigInt>& a, const std::vector<Big>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same(a[i], b[i])) return false;
  return true;
}

struct Term {
  bool nested = false;
  long d = 0;
  long off = 1;  // u for nested terms, v for shifts
};

struct Outcome {
  std::vector<Big> values;
  std::optional<long> failed_at;
  bool non_well_founded = false;
};

// Top-down memoized evaluation, asked for n = 0, 1, 2, ... in turn.
class Meta {
 public:
  Meta(std::vector<Term> terms, std::vector<long> init, std::optional<long> neg)
      : terms_(std::move(terms)), init_(std::move(init)), neg_(neg) {}

  Outcome run(long n_max) {
    Outcome out;
    for (long n = 0; n <= n_max; ++n) {
      auto v = value(n, out);
      if (!v) {
        out.failed_at = n;
        return out;
      }
      out.values.push_back(*v);
    }
    return out;
  }

 private:
  std::optional<Big> value(long n, Outcome& out) {
    if (n < 0) {
      if (neg_) return Big(*neg_);
      return std::nullopt;
    }
    if (n < static_cast<long>(init_.size())) return Big(init_[n]);
    if (n < static_cast<long>(out.values.size())) return out.values[n];
    Big total = 0;
    for (const auto& t : terms_) {
      long idx;
      if (t.nested) {
        auto inner = value(n - t.off, out);
        if (!inner) return std::nullopt;
        Big target = Big(n - t.d) - *inner;
        if (target >= n) {
          out.non_well_founded = true;
          return std::nullopt;
        }
        idx = target < 0 ? -1 : target.convert_to<long>();
      } else {
        idx = n - t.off;
      }
      auto v = value(idx, out);
      if (!v) return std::nullopt;
      total += *v;
    }
    return total;
  }

  std::vector<Term> terms_;
  std::vector<long> init_;
  std::optional<long> neg_;
};

// h_{a,b} (neg = a) and g_{a,b} (neg = 0) straight from the definition.
inline std::vector<Big> hg(long a, long b, long n_max, bool g) {
  std::vector<Big> f;
  auto at = [&](long i) -> Big { return i < 0 ? Big(g ? 0 : a) : f[i]; };
  for (long n = 0; n <= n_max; ++n) {
    if (n == 0) f.push_back(a);
    else if (n == 1) f.push_back(b);
    else {
      const Big inner = at(n - 1);
      const Big idx = Big(n) - inner;
      f.push_back(at(idx < 0 ? -1 : idx.convert_to<long>()) + at(n - 2));
    }
  }
  return f;
}

// Partitions into powers of two by the coin-change count.
inline std::vector<Big> partitions_pow2(long n_max) {
  std::vector<Big> ways(n_max + 1, 0);
  ways[0] = 1;
  for (long p = 1; p <= n_max; p *= 2)
    for (long n = p; n <= n_max; ++n) ways[n] += ways[n - p];
  return ways;
}

inline int thue_morse(std::uint64_t n) {
  if (n == 0) return 1;
  return (n % 2 ? -1 : 1) * thue_morse(n / 2);
}

// Hofstadter Q, 1-based: Q(1) = Q(2) = 1.
inline std::vector<long> hofstadter_q(long n_max) {
  std::vector<long> q(n_max + 1, 0);
  for (long n = 1; n <= n_max; ++n)
    q[n] = n <= 2 ? 1 : q[n - q[n - 1]] + q[n - q[n - 2]];
  return q;
}

// sum_{i < 2^k} t_i h(n - 2i), summed literally.
inline Big ptm_sum(int k, long n, const std::vector<Big>& h) {
  Big s = 0;
  for (long i = 0; i < (1L << k); ++i) s += thue_morse(i) * h[n - 2 * i];
  return s;
}

}  // namespace oracle
