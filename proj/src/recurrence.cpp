#include "metafib/recurrence.hpp"

#include <stdexcept>

namespace metafib {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

void RecurrenceSpec::validate() const {
  if (terms.empty()) throw std::invalid_argument("recurrence has no terms");
  if (init.empty()) throw std::invalid_argument("recurrence has no initial values");
  for (const Term& t : terms) {
    std::visit(overloaded{
                   [](const Shift& s) {
                     if (s.v < 1) throw std::invalid_argument("shift offset must be >= 1");
                   },
                   [](const Nested& q) {
                     if (q.u < 1) throw std::invalid_argument("nested offset u must be >= 1");
                     if (q.d < 0) throw std::invalid_argument("nested offset d must be >= 0");
                   },
               },
               t);
  }
  for (const BigInt& x : init) {
    if (sgn(x) < 0) throw std::invalid_argument("initial values must be nonnegative");
  }
  if (const auto* c = std::get_if<NegConstant>(&neg); c && sgn(c->c) < 0)
    throw std::invalid_argument("negative-index constant must be nonnegative");
}

std::string to_string(FailureKind kind) {
  return kind == FailureKind::Died ? "died" : "non-well-founded";
}

SequenceTable eval_range(const RecurrenceSpec& spec, Index n_max) {
  spec.validate();
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");

  SequenceTable table;
  table.spec = spec;
  table.n_max = n_max;
  auto& f = table.values;
  f.reserve(static_cast<std::size_t>(n_max) + 1);

  const Index k = spec.start();
  for (Index i = 0; i < k && i <= n_max; ++i) f.push_back(spec.init[static_cast<std::size_t>(i)]);

  const BigInt* neg_value = nullptr;
  if (const auto* c = std::get_if<NegConstant>(&spec.neg)) neg_value = &c->c;

  // Resolves f(i) for i < n; nullptr means the sequence died.
  auto at = [&](Index i) -> const BigInt* {
    if (i >= 0) return &f[static_cast<std::size_t>(i)];
    return neg_value;
  };

  BigInt sum;
  for (Index n = k; n <= n_max; ++n) {
    sum = 0;
    std::optional<FailureKind> failed;
    for (const Term& t : spec.terms) {
      const BigInt* ref = nullptr;
      if (const auto* s = std::get_if<Shift>(&t)) {
        ref = at(n - s->v);
      } else {
        const auto& q = std::get<Nested>(t);
        const BigInt* inner = at(n - q.u);
        if (inner) {
          // i = n - d - f(n-u); anything that does not fit is far below zero
          Index i = -1;
          if (auto small = to_index(*inner); small && *small <= n - q.d) i = n - q.d - *small;
          if (i >= n) {
            failed = FailureKind::NonWellFounded;
            break;
          }
          ref = at(i);
        }
      }
      if (!ref) {
        failed = FailureKind::Died;
        break;
      }
      sum += *ref;
    }
    if (failed) {
      table.failure = Failure{*failed, n};
      break;
    }
    f.push_back(sum);
  }
  return table;
}

EvalResult eval(const RecurrenceSpec& spec, Index n) {
  if (n < 0) throw std::invalid_argument("index must be >= 0");
  SequenceTable t = eval_range(spec, n);
  if (t.failure) return *t.failure;
  return std::move(t.values[static_cast<std::size_t>(n)]);
}

std::vector<BigInt> subsequence(std::span<const BigInt> values, Index modulus, Index residue) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  if (residue < 0 || residue >= modulus)
    throw std::invalid_argument("residue must satisfy 0 <= residue < modulus");
  std::vector<BigInt> out;
  for (auto i = static_cast<std::size_t>(residue); i < values.size();
       i += static_cast<std::size_t>(modulus))
    out.push_back(values[i]);
  return out;
}

std::vector<BigInt> subsequence(const SequenceTable& table, Index modulus, Index residue) {
  return subsequence(std::span<const BigInt>(table.values), modulus, residue);
}

RecurrenceSpec meta_spec(Index u, Index v, std::vector<BigInt> init, NegMode neg) {
  RecurrenceSpec s;
  s.terms = {Nested{0, u}, Shift{v}};
  s.init = std::move(init);
  s.neg = std::move(neg);
  s.validate();
  return s;
}

RecurrenceSpec h_spec(Index a, Index b) {
  if (a < 1 || b < 1) throw std::invalid_argument("h_{a,b} needs a, b >= 1");
  return meta_spec(1, 2, {from_index(a), from_index(b)}, NegConstant{from_index(a)});
}

RecurrenceSpec g_spec(Index a, Index b) {
  if (a < 1 || b < 1) throw std::invalid_argument("g_{a,b} needs a, b >= 1");
  return meta_spec(1, 2, {from_index(a), from_index(b)}, NegConstant{BigInt(0)});
}

}  // namespace metafib
