#include "metafib/closed_forms.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace metafib {

namespace {

BigInt big(Index v) { return from_index(v); }

BigInt times_pow2(Index base, Index e) {
  BigInt r = big(base);
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

// Value at n when the case has a closed expression there.
std::optional<BigInt> direct(CaseTag tag, Index a, Index b, Index n) {
  const Index m = n / 2;
  const bool odd = n % 2 != 0;
  switch (tag) {
    case CaseTag::H11:
      if (n <= 1) return big(1);
      if (odd) return big(m + 1);
      return std::nullopt;
    case CaseTag::H1b:
      if (n == 1) return big(b);
      if (!odd) return big(m + 1);
      return std::nullopt;
    case CaseTag::Ha_b_both_ge2:
      return odd ? big(m * a + b) : big((m + 1) * a);
    case CaseTag::Ha1_a_ge3:
      return n == 0 ? big(a) : big(m * a + 1);
    case CaseTag::H21: {
      static constexpr Index prefix[] = {2, 1, 3, 3};
      if (n < 4) return big(prefix[n]);
      return odd ? big(2 * m) : big(3 * m - 2);
    }
    case CaseTag::G_a_ge_b_ge2:
      if (odd) return big(b);
      if (m < b / 2) return big(a);
      if (b % 2 != 0) return big(a + (m - b / 2) * b);
      if (b == 2) return times_pow2(a, m);
      return std::nullopt;
    case CaseTag::G_b_ge_a_ge2:
      if (!odd) return big(a);
      if (m < a / 2) return big(b);
      if (a % 2 != 0) return big(b + (m + 1 - a / 2) * a);
      if (a == 2) return times_pow2(b, m);
      return std::nullopt;
    case CaseTag::G_a_ge3_b1:
      if (odd) {
        if (m < a - 1) return big(1);
        if (a % 2 != 0) return big(a + 1);
        return m == a - 1 ? big(a + 1) : big(a + 2);
      }
      if (m < (a % 2 == 0 ? a + 1 : a)) return big(a + m);
      return std::nullopt;
    case CaseTag::G_a1_b_ge3:
      if (!odd) return big(m < b - 1 ? 1 : 2);
      if (m < b - 1) return big(b + m);
      return times_pow2(b - 1, m - b + 3);
    case CaseTag::G11:
    case CaseTag::G12:
    case CaseTag::G21: {
      const auto& seed = g_sporadic_seed(tag);
      if (n < static_cast<Index>(seed.size())) return big(seed[static_cast<std::size_t>(n)]);
      if (tag == CaseTag::G11 && odd) return big(4);
      if (tag == CaseTag::G12 && !odd) return big(4);
      if (tag == CaseTag::G21 && odd) return big(6);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// Value at n = f.size() from the proved recurrence, given f(0..n-1).
BigInt step(CaseTag tag, Index a, Index b, const std::vector<BigInt>& f) {
  const auto n = static_cast<Index>(f.size());
  auto at = [&](Index i) -> BigInt { return i < 0 ? BigInt(0) : f[static_cast<std::size_t>(i)]; };
  switch (tag) {
    case CaseTag::H11:
      // h(2m) = h(2m-2) + h(m)
      return at(n - 2) + at(n / 2);
    case CaseTag::H1b:
      // h(2m+1) = h(m) + h(2m-1)
      return at((n - 1) / 2) + at(n - 2);
    case CaseTag::G_a_ge_b_ge2:
      // g(2m+2) = g(2m+2-b) + g(2m)
      return at(n - b) + at(n - 2);
    case CaseTag::G_b_ge_a_ge2:
      // g(2m+3) = g(2m+3-a) + g(2m+1)
      return at(n - a) + at(n - 2);
    case CaseTag::G_a_ge3_b1:
      if (a % 2 == 0) return at(n - 2 - a) + at(n - 2);
      return at(n - 1 - a) + at(n - 2);
    case CaseTag::G11:
      return at(n - 2) + at(n - 4);
    case CaseTag::G12:
      return at(n - 2) + at(n - 4);
    case CaseTag::G21:
      return at(n - 2) + at(n - 6);
    default:
      break;
  }
  throw std::logic_error("case " + to_string(tag) + " has no recurrence step");
}

void extend(CaseTag tag, Index a, Index b, std::vector<BigInt>& f, Index n_max) {
  if (n_max >= 0) f.reserve(static_cast<std::size_t>(n_max) + 1);
  for (auto n = static_cast<Index>(f.size()); n <= n_max; ++n) {
    if (auto v = direct(tag, a, b, n))
      f.push_back(std::move(*v));
    else
      f.push_back(step(tag, a, b, f));
  }
}

using MemoKey = std::tuple<Family, Index, Index>;

std::vector<BigInt>& memo_for(Family fam, Index a, Index b) {
  thread_local std::map<MemoKey, std::vector<BigInt>> memo;
  return memo[MemoKey{fam, a, b}];
}

BigInt fast(Family fam, Index a, Index b, Index n) {
  if (n < 0) throw std::invalid_argument("index must be >= 0");
  const CaseTag tag = classify_params({a, b, fam});
  if (auto v = direct(tag, a, b, n)) return *v;
  auto& f = memo_for(fam, a, b);
  extend(tag, a, b, f, n);
  return f[static_cast<std::size_t>(n)];
}

std::vector<BigInt> fast_range(Family fam, Index a, Index b, Index n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  const CaseTag tag = classify_params({a, b, fam});
  std::vector<BigInt> f;
  extend(tag, a, b, f, n_max);
  return f;
}

}  // namespace

std::string to_string(Family family) { return family == Family::H ? "h" : "g"; }

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::H11: return "H11";
    case CaseTag::H1b: return "H1b";
    case CaseTag::Ha_b_both_ge2: return "Ha_b_both_ge2";
    case CaseTag::Ha1_a_ge3: return "Ha1_a_ge3";
    case CaseTag::H21: return "H21";
    case CaseTag::G_a_ge_b_ge2: return "G_a_ge_b_ge2";
    case CaseTag::G_b_ge_a_ge2: return "G_b_ge_a_ge2";
    case CaseTag::G_a_ge3_b1: return "G_a_ge3_b1";
    case CaseTag::G_a1_b_ge3: return "G_a1_b_ge3";
    case CaseTag::G11: return "G11";
    case CaseTag::G12: return "G12";
    case CaseTag::G21: return "G21";
  }
  return "?";
}

CaseTag classify_params(const FamilyParams& p) {
  const Index a = p.a, b = p.b;
  if (a < 1 || b < 1) throw std::invalid_argument("family parameters must be >= 1");
  if (p.family == Family::H) {
    if (a == 1) return b == 1 ? CaseTag::H11 : CaseTag::H1b;
    if (b >= 2) return CaseTag::Ha_b_both_ge2;
    return a >= 3 ? CaseTag::Ha1_a_ge3 : CaseTag::H21;
  }
  if (a >= 2 && b >= 2) {
    if (a == b) return a % 2 == 0 ? CaseTag::G_a_ge_b_ge2 : CaseTag::G_b_ge_a_ge2;
    return a > b ? CaseTag::G_a_ge_b_ge2 : CaseTag::G_b_ge_a_ge2;
  }
  if (b == 1 && a >= 3) return CaseTag::G_a_ge3_b1;
  if (a == 1 && b >= 3) return CaseTag::G_a1_b_ge3;
  if (a == 1 && b == 1) return CaseTag::G11;
  if (a == 1) return CaseTag::G12;
  return CaseTag::G21;
}

const std::vector<long>& g_sporadic_seed(CaseTag tag) {
  // g(0..) up to the first index covered by the eventual recurrences.
  static const std::vector<long> g11 = {1, 1, 2, 2, 4, 3};
  static const std::vector<long> g12 = {1, 2, 2, 4, 3};
  static const std::vector<long> g21 = {2, 1, 3, 3, 4, 4, 7};
  switch (tag) {
    case CaseTag::G11: return g11;
    case CaseTag::G12: return g12;
    case CaseTag::G21: return g21;
    default: break;
  }
  throw std::invalid_argument("no sporadic seed for case " + to_string(tag));
}

BigInt h_fast(Index a, Index b, Index n) { return fast(Family::H, a, b, n); }
BigInt g_fast(Index a, Index b, Index n) { return fast(Family::G, a, b, n); }

std::vector<BigInt> h_fast_range(Index a, Index b, Index n_max) {
  return fast_range(Family::H, a, b, n_max);
}
std::vector<BigInt> g_fast_range(Index a, Index b, Index n_max) {
  return fast_range(Family::G, a, b, n_max);
}

bool h_prefix_sum_check(Index a, Index b, Index n_max) {
  if (a != 1) throw std::invalid_argument("prefix-sum identities exist only for a = 1");
  if (b < 1) throw std::invalid_argument("b must be >= 1");
  if (n_max < 0) return true;
  const auto h = h_fast_range(1, b, 2 * n_max + 1);
  BigInt sum = 0;
  for (Index n = 0; n <= n_max; ++n) {
    sum += h[static_cast<std::size_t>(n)];
    if (b == 1) {
      if (h[static_cast<std::size_t>(2 * n)] != sum) return false;
    } else if (h[static_cast<std::size_t>(2 * n + 1)] != sum + (b - 1)) {
      return false;
    }
  }
  return true;
}

bool g_shift_check(Index a, Index b, Index n_max) {
  if (!(a > b && b >= 2)) throw std::invalid_argument("shift identity needs a > b >= 2");
  if (n_max < 0) return true;
  const auto gab = g_fast_range(a, b, n_max + 1);
  const auto gba = g_fast_range(b, a, n_max + 1);
  for (Index n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (b % 2 == 0 ? gba[i + 1] != gab[i] : gba[i] != gab[i + 1]) return false;
  }
  return true;
}

}  // namespace metafib
