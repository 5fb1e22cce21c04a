#include "metafib/automata.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "metafib/closed_forms.hpp"
#include "metafib/partitions.hpp"

namespace metafib {

void Dfao::validate() const {
  if (base < 2) throw std::invalid_argument("dfao base must be >= 2");
  if (states.empty()) throw std::invalid_argument("dfao has no states");
  if (initial >= states.size()) throw std::invalid_argument("dfao initial state out of range");
  if (transitions.size() != states.size() || outputs.size() != states.size())
    throw std::invalid_argument("dfao transition/output tables must cover every state");
  for (const auto& row : transitions) {
    if (row.size() != static_cast<std::size_t>(base))
      throw std::invalid_argument("dfao transition row must cover every digit");
    for (std::size_t t : row)
      if (t >= states.size()) throw std::invalid_argument("dfao transition target out of range");
  }
}

std::int64_t run_dfao(const Dfao& d, std::uint64_t n) {
  const auto k = static_cast<std::uint64_t>(d.base);
  std::vector<std::size_t> digits;  // least significant first
  for (; n > 0; n /= k) digits.push_back(static_cast<std::size_t>(n % k));
  if (d.order == DigitOrder::MostSignificantFirst) std::reverse(digits.begin(), digits.end());
  std::size_t s = d.initial;
  for (std::size_t digit : digits) s = d.transitions[s][digit];
  return d.outputs[s];
}

Dfao ptm_dfao() {
  Dfao d;
  d.base = 2;
  d.order = DigitOrder::MostSignificantFirst;
  d.states = {"+1", "-1"};
  d.initial = 0;
  d.transitions = {{0, 1}, {1, 0}};
  d.outputs = {1, -1};
  return d;
}

Dfao r2n_dfao() {
  // Each state is named after the subsequence of r it generates; reading a
  // digit c in state "Mn+e" moves to "2Mn+(Mc+e)", folded by the relations
  // r(8n+6) = r(8n+4), r(32n) = r(16n), r(32n+2) = r(16n+2) and
  // r(16n+4) = 0,1,0,1,...  r(16n+12) = 1,0,1,0,...
  struct Row {
    const char* name;
    std::size_t on0, on1;
    std::int64_t out;
  };
  static constexpr Row rows[] = {
      {"2n", 1, 2, 1},        // 0
      {"4n", 3, 5, 1},        // 1
      {"4n+2", 4, 5, 0},      // 2
      {"8n", 6, 9, 1},        // 3
      {"8n+2", 7, 10, 0},     // 4
      {"8n+4", 8, 11, 0},     // 5
      {"16n", 6, 10, 1},      // 6
      {"16n+2", 7, 9, 0},     // 7
      {"16n+4", 12, 13, 0},   // 8
      {"16n+8", 8, 8, 0},     // 9
      {"16n+10", 11, 11, 1},  // 10
      {"16n+12", 13, 12, 1},  // 11
      {"32n+4", 12, 12, 0},   // 12
      {"32n+12", 13, 13, 1},  // 13
  };
  Dfao d;
  d.base = 2;
  d.order = DigitOrder::LeastSignificantFirst;
  d.initial = 0;
  for (const Row& r : rows) {
    d.states.emplace_back(r.name);
    d.transitions.push_back({r.on0, r.on1});
    d.outputs.push_back(r.out);
  }
  return d;
}

HModTable::HModTable(std::uint32_t modulus) : modulus_(modulus) {
  if (modulus == 0) throw std::invalid_argument("modulus must be >= 1");
}

void HModTable::ensure(std::uint64_t n) {
  if (n < values_.size()) return;
  std::uint64_t target = std::max<std::uint64_t>(n + 1, 2 * values_.size());
  values_.reserve(target);
  const std::uint64_t m = modulus_;
  for (std::uint64_t i = values_.size(); i < target; ++i) {
    std::uint64_t v;
    if (i <= 1)
      v = 1 % m;
    else if (i % 2 == 1)
      v = ((i - 1) / 2 + 1) % m;
    else
      v = (values_[i - 2] + values_[i / 2]) % m;
    values_.push_back(static_cast<std::uint32_t>(v));
  }
}

std::uint32_t HModTable::operator()(std::uint64_t n) {
  ensure(n);
  return values_[n];
}

int r_direct(std::uint64_t n) {
  thread_local HModTable table(2);
  return static_cast<int>(table(n));
}

bool check_r_relations(std::uint64_t n_max) {
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (r_direct(8 * n + 2) != 1 - r_direct(8 * n)) return false;
    if (r_direct(8 * n + 6) != r_direct(8 * n + 4)) return false;
    if (r_direct(32 * n) != r_direct(16 * n)) return false;
    if (r_direct(32 * n + 16) != 1 - r_direct(16 * n + 8)) return false;
  }
  return true;
}

bool check_r_periods(std::uint64_t n_bound) {
  static constexpr int p4[] = {0, 1, 1, 0};
  static constexpr int p8[] = {0, 0, 1, 1};
  for (std::uint64_t n = 0; n < n_bound; ++n) {
    if (r_direct(8 * n + 4) != p4[n % 4]) return false;
    if (r_direct(16 * n + 8) != p8[n % 4]) return false;
  }
  return true;
}

namespace {

struct PrefixHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::vector<std::int64_t> kernel_prefix(const SymbolOracle& seq, std::uint64_t stride,
                                        std::uint64_t offset, std::size_t len) {
  std::vector<std::int64_t> out(len);
  for (std::size_t n = 0; n < len; ++n) out[n] = seq(stride * n + offset);
  return out;
}

// k^j, or nullopt once k^j * len would not fit comfortably in 62 bits.
std::optional<std::uint64_t> stride_for(int k, int j, std::size_t len) {
  std::uint64_t s = 1;
  const std::uint64_t limit = (std::uint64_t{1} << 62) / std::max<std::size_t>(len, 1);
  for (int t = 0; t < j; ++t) {
    if (s > limit / static_cast<std::uint64_t>(k)) return std::nullopt;
    s *= static_cast<std::uint64_t>(k);
  }
  return s;
}

}  // namespace

KernelReport kernel_explore(const SymbolOracle& seq, int k, std::size_t prefix_len,
                            std::size_t max_classes) {
  if (k < 2) throw std::invalid_argument("kernel base must be >= 2");
  if (prefix_len < 16) throw std::invalid_argument("prefix_len must be >= 16");
  if (max_classes < 1) throw std::invalid_argument("max_classes must be >= 1");

  KernelReport rep;
  rep.base = k;
  rep.prefix_len = prefix_len;
  std::unordered_map<std::vector<std::int64_t>, std::size_t, PrefixHash> index;

  index.emplace(kernel_prefix(seq, 1, 0, prefix_len), 0);
  rep.discovered.push_back({0, 0});
  rep.classes.push_back({{0, 0}});
  std::vector<KernelDescriptor> frontier = {{0, 0}};

  while (!frontier.empty()) {
    const int j = frontier.front().j;
    auto parent_stride = stride_for(k, j, prefix_len);
    auto child_stride = stride_for(k, j + 1, prefix_len);
    if (!parent_stride || !child_stride) {
      rep.truncated = true;
      return rep;
    }
    std::vector<KernelDescriptor> children;
    for (const auto& p : frontier)
      for (int c = 0; c < k; ++c)
        children.push_back({j + 1, p.i + static_cast<std::uint64_t>(c) * *parent_stride});
    std::sort(children.begin(), children.end(),
              [](const auto& x, const auto& y) { return x.i < y.i; });

    std::vector<KernelDescriptor> next;
    for (const auto& child : children) {
      auto prefix = kernel_prefix(seq, *child_stride, child.i, prefix_len);
      auto it = index.find(prefix);
      if (it != index.end()) {
        rep.discovered.push_back(child);
        rep.classes[it->second].push_back(child);
        continue;
      }
      if (rep.classes.size() >= max_classes) {
        rep.truncated = true;
        return rep;
      }
      index.emplace(std::move(prefix), rep.classes.size());
      rep.discovered.push_back(child);
      rep.classes.push_back({child});
      next.push_back(child);
    }
    frontier = std::move(next);
  }
  rep.closed = true;
  return rep;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::uint64_t reduce(std::int64_t x) {
  std::int64_t m = x % static_cast<std::int64_t>(kPrime);
  return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(kPrime) : m);
}

// Row-echelon basis over F_p with one pivot column per row.
class ModBasis {
 public:
  bool insert(std::vector<std::uint64_t> v) {
    for (const auto& [col, row] : rows_) {
      if (v[col] == 0) continue;
      const std::uint64_t f = v[col];
      for (std::size_t t = col; t < v.size(); ++t)
        v[t] = (v[t] + kPrime - mulmod(f, row[t])) % kPrime;
    }
    auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    if (it == v.end()) return false;
    const auto col = static_cast<std::size_t>(it - v.begin());
    const std::uint64_t inv = powmod(v[col], kPrime - 2);
    for (auto& x : v) x = mulmod(x, inv);
    rows_.emplace_back(col, std::move(v));
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> rows_;
};

}  // namespace

RankProfile kernel_rank_profile(const SymbolOracle& seq, int k, std::size_t prefix_len,
                                int max_depth) {
  if (k < 2) throw std::invalid_argument("kernel base must be >= 2");
  if (prefix_len < 1) throw std::invalid_argument("prefix_len must be >= 1");
  if (max_depth < 0 || max_depth > 20) throw std::invalid_argument("max_depth out of range");
  RankProfile prof;
  prof.prefix_len = prefix_len;
  ModBasis basis;
  for (int j = 0; j <= max_depth; ++j) {
    auto stride = stride_for(k, j, prefix_len);
    if (!stride) throw std::invalid_argument("kernel depth too large for 64-bit indices");
    for (std::uint64_t i = 0; i < *stride; ++i) {
      std::vector<std::uint64_t> v(prefix_len);
      for (std::size_t n = 0; n < prefix_len; ++n) v[n] = reduce(seq(*stride * n + i));
      basis.insert(std::move(v));
    }
    prof.rank_by_depth.push_back(basis.rank());
  }
  const auto& r = prof.rank_by_depth;
  prof.stabilized = r.size() >= 2 && r[r.size() - 1] == r[r.size() - 2] && r.back() < prefix_len;
  return prof;
}

std::vector<std::uint64_t> r_level_positions(int bit, std::size_t count) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t n = 0; out.size() < count; ++n)
    if (r_direct(n) == bit) out.push_back(n);
  return out;
}

GrowthReport growth_witness(Index a, Index b, Index n_max) {
  if (a != 1) throw std::invalid_argument("growth witness is defined for a = 1 only");
  if (b < 1) throw std::invalid_argument("b must be >= 1");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  GrowthReport rep;
  rep.a = a;
  rep.b = b;
  rep.n_max = n_max;

  const auto h = h_fast_range(1, b, 2 * n_max + 1);
  const auto bin = bin_table(n_max + 1);
  auto s = [&](Index n) -> const BigInt& {
    return h[static_cast<std::size_t>(b == 1 ? 2 * n : 2 * n + 1)];
  };
  auto lower = [&](Index n) -> const BigInt& {
    return bin[static_cast<std::size_t>(b == 1 ? n : n + 1)];
  };

  rep.lower_bound_holds = true;
  for (Index n = 0; n <= n_max; ++n) {
    if (s(n) < lower(n)) {
      rep.lower_bound_holds = false;
      rep.first_violation = n;
      break;
    }
  }

  BigInt power;
  for (int c : {1, 2, 4, 8}) {
    GrowthWitness w;
    w.exponent = c;
    std::optional<Index> run_start;
    for (Index n = 1; n <= n_max; ++n) {
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(c));
      if (s(n) > power) {
        if (!w.first) w.first = n;
        if (!run_start) run_start = n;
      } else {
        run_start.reset();
      }
    }
    w.sustained_from = run_start;
    rep.witnesses.push_back(w);
  }
  return rep;
}

std::string to_dot(const Dfao& d, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n";
  os << "  label=\"" << (d.order == DigitOrder::MostSignificantFirst ? "msd" : "lsd")
     << " first, base " << d.base << "\";\n";
  os << "  start [shape=point];\n";
  for (std::size_t s = 0; s < d.state_count(); ++s)
    os << "  s" << s << " [shape=circle,label=\"" << d.states[s] << "\\n" << d.outputs[s]
       << "\"];\n";
  os << "  start -> s" << d.initial << ";\n";
  for (std::size_t s = 0; s < d.state_count(); ++s) {
    // group parallel edges into one labelled arc
    std::vector<std::pair<std::size_t, std::string>> arcs;
    for (std::size_t c = 0; c < d.transitions[s].size(); ++c) {
      const std::size_t t = d.transitions[s][c];
      auto it = std::find_if(arcs.begin(), arcs.end(), [&](const auto& x) { return x.first == t; });
      if (it == arcs.end())
        arcs.emplace_back(t, std::to_string(c));
      else
        it->second += "," + std::to_string(c);
    }
    for (const auto& [t, label] : arcs)
      os << "  s" << s << " -> s" << t << " [label=\"" << label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace metafib
