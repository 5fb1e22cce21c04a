#include "metafib/series.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "metafib/automata.hpp"
#include "metafib/closed_forms.hpp"
#include "metafib/partitions.hpp"

namespace metafib {

// ---- SeriesZ ---------------------------------------------------------------

SeriesZ::SeriesZ(std::size_t order) : coeffs_(order + 1) {}

SeriesZ::SeriesZ(std::vector<BigInt> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

bool SeriesZ::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) == 0; });
}

static void require_same_order(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("series operands must share the truncation order");
}

SeriesZ& SeriesZ::operator+=(const SeriesZ& o) {
  require_same_order(order(), o.order());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

SeriesZ& SeriesZ::operator-=(const SeriesZ& o) {
  require_same_order(order(), o.order());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

SeriesZ operator+(SeriesZ a, const SeriesZ& b) { return a += b; }
SeriesZ operator-(SeriesZ a, const SeriesZ& b) { return a -= b; }

SeriesZ operator*(const SeriesZ& a, const SeriesZ& b) {
  require_same_order(a.order(), b.order());
  const std::size_t N = a.order();
  SeriesZ r(N);
  for (std::size_t i = 0; i <= N; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= N; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return r;
}

SeriesZ monomial(std::size_t exponent, std::size_t order) {
  SeriesZ r(order);
  if (exponent <= order) r[exponent] = 1;
  return r;
}

SeriesZ substitute_square(const SeriesZ& s) {
  SeriesZ r(s.order());
  for (std::size_t n = 0; 2 * n <= s.order(); ++n) r[2 * n] = s[n];
  return r;
}

SeriesZ invert_unit(const SeriesZ& s) {
  const bool unit = s[0] == 1 || s[0] == -1;
  if (!unit) throw std::invalid_argument("constant term is not invertible over Z");
  const std::size_t N = s.order();
  const int c0 = s[0] == 1 ? 1 : -1;
  SeriesZ inv(N);
  inv[0] = c0;
  BigInt acc;
  for (std::size_t n = 1; n <= N; ++n) {
    acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (sgn(s[i]) == 0) continue;
      mpz_addmul(acc.get_mpz_t(), s[i].get_mpz_t(), inv[n - i].get_mpz_t());
    }
    inv[n] = c0 == 1 ? BigInt(-acc) : acc;
  }
  return inv;
}

SeriesZ div_one_minus_xm(SeriesZ s, std::size_t m) {
  if (m == 0) throw std::invalid_argument("1 - x^0 is not invertible");
  for (std::size_t n = m; n <= s.order(); ++n) s[n] += s[n - m];
  return s;
}

SeriesZ mul_one_minus_xm(const SeriesZ& s, std::size_t m) {
  SeriesZ r = s;
  for (std::size_t n = m; n <= s.order(); ++n) r[n] -= s[n - m];
  return r;
}

SeriesZ geometric(std::size_t m, std::size_t order) { return div_one_minus_xm(monomial(0, order), m); }

// ---- SeriesF2 --------------------------------------------------------------

SeriesF2::SeriesF2(std::size_t order) : order_(order), words_((order + 64) / 64, 0) {}

void SeriesF2::set(std::size_t n, bool bit) {
  const std::uint64_t mask = std::uint64_t{1} << (n % 64);
  if (bit)
    words_[n / 64] |= mask;
  else
    words_[n / 64] &= ~mask;
}

bool SeriesF2::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void SeriesF2::trim() {
  const std::size_t used = (order_ + 1) % 64;
  if (used != 0) words_.back() &= (std::uint64_t{1} << used) - 1;
}

SeriesF2& SeriesF2::operator+=(const SeriesF2& o) {
  require_same_order(order_, o.order_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

void SeriesF2::add_shifted(const SeriesF2& b, std::size_t e) {
  require_same_order(order_, b.order_);
  const std::size_t ws = e / 64, bs = e % 64, n = words_.size();
  for (std::size_t w = 0; w + ws < n; ++w) {
    if (b.words_[w] == 0) continue;
    words_[w + ws] ^= b.words_[w] << bs;
    if (bs != 0 && w + ws + 1 < n) words_[w + ws + 1] ^= b.words_[w] >> (64 - bs);
  }
  trim();
}

SeriesF2 operator+(SeriesF2 a, const SeriesF2& b) { return a += b; }

SeriesF2 operator*(const SeriesF2& a, const SeriesF2& b) {
  require_same_order(a.order(), b.order());
  SeriesF2 r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i)
    if (a[i]) r.add_shifted(b, i);
  return r;
}

SeriesF2 substitute_square(const SeriesF2& s) {
  SeriesF2 r(s.order());
  for (std::size_t n = 0; 2 * n <= s.order(); ++n)
    if (s[n]) r.set(2 * n, true);
  return r;
}

SeriesF2 invert_unit(const SeriesF2& s) {
  if (!s[0]) throw std::invalid_argument("constant term is not invertible over F2");
  const std::size_t N = s.order();
  SeriesF2 inv(N);
  inv.set(0, true);
  for (std::size_t n = 1; n <= N; ++n) {
    bool acc = false;
    for (std::size_t i = 1; i <= n; ++i) acc ^= s[i] && inv[n - i];
    inv.set(n, acc);
  }
  return inv;
}

SeriesF2 div_one_minus_xm(const SeriesF2& s, std::size_t m) {
  if (m == 0) throw std::invalid_argument("1 - x^0 is not invertible");
  SeriesF2 r = s;
  for (std::size_t n = m; n <= s.order(); ++n) r.set(n, r[n] != r[n - m]);
  return r;
}

SeriesF2 mul_one_minus_xm(const SeriesF2& s, std::size_t m) {
  SeriesF2 r = s;
  if (m <= s.order()) r.add_shifted(s, m);
  return r;
}

SeriesF2 reduce_mod2(const SeriesZ& s) {
  SeriesF2 r(s.order());
  for (std::size_t n = 0; n <= s.order(); ++n) r.set(n, mpz_odd_p(s[n].get_mpz_t()) != 0);
  return r;
}

// ---- generating functions --------------------------------------------------

namespace {

SeriesZ shift_up(const SeriesZ& s, std::size_t e) {
  SeriesZ r(s.order());
  for (std::size_t n = e; n <= s.order(); ++n) r[n] = s[n - e];
  return r;
}

SeriesF2 shift_up(const SeriesF2& s, std::size_t e) {
  SeriesF2 r(s.order());
  r.add_shifted(s, e);
  return r;
}

SeriesF2 from_bits(std::initializer_list<std::size_t> exps, std::size_t order) {
  SeriesF2 r(order);
  for (std::size_t e : exps)
    if (e <= order) r.set(e, !r[e]);
  return r;
}

}  // namespace

SeriesZ h_series(std::size_t order) {
  return SeriesZ(h_fast_range(1, 1, static_cast<Index>(order)), order);
}

SeriesZ hb_series(std::int64_t b, std::size_t order) {
  return SeriesZ(h_fast_range(1, b, static_cast<Index>(order)), order);
}

SeriesZ bin_series(std::size_t order) {
  return SeriesZ(bin_table(static_cast<Index>(order)).values, order);
}

SeriesZ ptm_series(std::size_t order) {
  SeriesZ t(order);
  for (std::size_t n = 0; n <= order; ++n) t[n] = ptm(static_cast<Index>(n));
  return t;
}

SeriesF2 g_series(std::size_t order) {
  SeriesF2 g(order);
  for (std::size_t n = 0; n <= order; ++n) g.set(n, r_direct(n) != 0);
  return g;
}

SeriesF2 gb_series(std::int64_t b, std::size_t order) { return reduce_mod2(hb_series(b, order)); }

SeriesZ h_equation_residual(std::size_t order) {
  // H(x^2)/(1-x^2) - H(x) + x/(1-x^2)^2
  const SeriesZ H = h_series(order);
  SeriesZ r = div_one_minus_xm(substitute_square(H), 2);
  r -= H;
  r += div_one_minus_xm(div_one_minus_xm(monomial(1, order), 2), 2);
  return r;
}

SeriesZ hb_equation_residual(std::int64_t b, std::size_t order) {
  if (b < 2) throw std::invalid_argument("functional equation for H_b needs b >= 2");
  // x/(1-x^2) H_b(x^2) + (b-1)x/(1-x^2) + 1/(1-x^2)^2 - H_b(x)
  const SeriesZ Hb = hb_series(b, order);
  SeriesZ r = shift_up(div_one_minus_xm(substitute_square(Hb), 2), 1);
  SeriesZ lin = monomial(1, order);
  if (order >= 1) lin[1] = b - 1;
  r += div_one_minus_xm(lin, 2);
  r += div_one_minus_xm(div_one_minus_xm(monomial(0, order), 2), 2);
  r -= Hb;
  return r;
}

SeriesF2 g_algebraic_residual(std::size_t order) {
  // (1-x^2) G^2 + (1-x^2)^2 G + x over F2
  const SeriesF2 G = g_series(order);
  SeriesF2 r = mul_one_minus_xm(G * G, 2);
  r += mul_one_minus_xm(mul_one_minus_xm(G, 2), 2);
  r += from_bits({1}, order);
  return r;
}

SeriesF2 g_frobenius_residual(std::size_t order) {
  const SeriesF2 G = g_series(order);
  return substitute_square(G) + G * G;
}

SeriesF2 fb_residual(std::int64_t b, std::size_t order) {
  if (b < 2) throw std::invalid_argument("f_b needs b >= 2");
  // x(1-x^2) y^2 - (1-x^2)^2 y + (b-1) x (1-x^2) + 1, signs vanish mod 2
  const SeriesF2 y = gb_series(b, order);
  SeriesF2 r = shift_up(mul_one_minus_xm(y * y, 2), 1);
  r += mul_one_minus_xm(mul_one_minus_xm(y, 2), 2);
  if ((b - 1) % 2 != 0) r += from_bits({1, 3}, order);
  r += from_bits({0}, order);
  return r;
}

SeriesZ bin_functional_residual(std::size_t order) {
  const SeriesZ B = bin_series(order);
  return mul_one_minus_xm(B, 1) - substitute_square(B);
}

SeriesZ ptm_bin_residual(std::size_t order) {
  return ptm_series(order) * bin_series(order) - monomial(0, order);
}

bool check_H_equation(std::size_t order) {
  if (order < 2) throw std::invalid_argument("order must be >= 2");
  return h_equation_residual(order).is_zero();
}

bool check_Hb_equation(std::int64_t b, std::size_t order) {
  if (order < 2) throw std::invalid_argument("order must be >= 2");
  return hb_equation_residual(b, order).is_zero();
}

bool check_G_algebraic(std::size_t order) {
  if (order < 2) throw std::invalid_argument("order must be >= 2");
  return g_algebraic_residual(order).is_zero() && g_frobenius_residual(order).is_zero();
}

bool check_fb_algebraic(std::int64_t b, std::size_t order) {
  return fb_residual(b, order).is_zero();
}

bool check_H_parity_split(std::size_t order) {
  const SeriesZ H = h_series(order);
  SeriesZ even(order), odd(order);
  for (std::size_t n = 0; n <= order; ++n) (n % 2 == 0 ? even : odd)[n] = H[n];
  const SeriesZ even_rhs = div_one_minus_xm(substitute_square(H), 2);
  const SeriesZ odd_rhs = div_one_minus_xm(div_one_minus_xm(monomial(1, order), 2), 2);
  return even == even_rhs && odd == odd_rhs;
}

Decomposition decompose_H(std::size_t order) {
  if (order < 4) throw std::invalid_argument("order must be >= 4");
  const SeriesZ H = h_series(order);
  const SeriesZ B = bin_series(order);
  const SeriesZ hbar = substitute_square(B);

  Decomposition out;
  out.pieces = static_cast<std::size_t>(std::bit_width(order));  // floor(log2 N) + 1
  SeriesZ sum(order);
  for (std::size_t i = 1; i <= out.pieces; ++i) {
    SeriesZ piece = monomial(std::size_t{1} << (i - 1), order);
    for (std::size_t j = 1; j <= i; ++j) piece = div_one_minus_xm(std::move(piece), std::size_t{1} << j);
    piece = div_one_minus_xm(std::move(piece), std::size_t{1} << i);
    sum += piece;
  }
  out.d = sum.coeffs();

  out.ok = (hbar + sum) == H;
  for (std::size_t n = 0; out.ok && 2 * n <= order; ++n)
    out.ok = H[2 * n] == B[n] + sum[2 * n];
  return out;
}

RationalityReport rationality_evidence(const SeriesF2& s, std::size_t max_period,
                                       std::size_t max_preperiod) {
  if (max_period < 1) throw std::invalid_argument("max_period must be >= 1");
  if (s.order() < 2 * (max_period + max_preperiod))
    throw std::invalid_argument("series too short for the requested search bounds");
  RationalityReport rep;
  rep.order = s.order();
  const std::size_t N = s.order();
  for (std::size_t p = 1; p <= max_period; ++p) {
    // the last n with s[n] != s[n+p] fixes the least preperiod for p
    std::size_t pre = 0;
    for (std::size_t n = N - p + 1; n-- > 0;) {
      if (s[n] != s[n + p]) {
        pre = n + 1;
        break;
      }
    }
    if (pre <= max_preperiod) {
      rep.periodic = true;
      rep.period = p;
      rep.preperiod = pre;
      return rep;
    }
  }
  return rep;
}

void write_series_csv(std::ostream& out, const SeriesZ& s) {
  out << "n,coefficient\n";
  for (std::size_t n = 0; n <= s.order(); ++n) out << n << ',' << to_decimal(s[n]) << '\n';
}

void write_series_csv(std::ostream& out, const SeriesF2& s) {
  out << "n,coefficient\n";
  for (std::size_t n = 0; n <= s.order(); ++n) out << n << ',' << (s[n] ? 1 : 0) << '\n';
}

}  // namespace metafib
