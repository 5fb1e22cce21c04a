#pragma once

// Truncated formal power series over Z and over F_2, and the functional /
// algebraic equations satisfied by the generating functions of h_{1,b}.
// All arithmetic is exact through the stated order N; coefficients beyond N
// are never read or produced.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "metafib/bigint.hpp"

namespace metafib {

class SeriesZ {
 public:
  explicit SeriesZ(std::size_t order = 0);
  SeriesZ(std::vector<BigInt> coeffs, std::size_t order);  // pads or cuts to order

  std::size_t order() const { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t n) const { return coeffs_[n]; }
  BigInt& operator[](std::size_t n) { return coeffs_[n]; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool operator==(const SeriesZ& o) const { return coeffs_ == o.coeffs_; }

  SeriesZ& operator+=(const SeriesZ& o);
  SeriesZ& operator-=(const SeriesZ& o);

 private:
  std::vector<BigInt> coeffs_;
};

SeriesZ operator+(SeriesZ a, const SeriesZ& b);
SeriesZ operator-(SeriesZ a, const SeriesZ& b);
SeriesZ operator*(const SeriesZ& a, const SeriesZ& b);

SeriesZ monomial(std::size_t exponent, std::size_t order);  // x^e
SeriesZ substitute_square(const SeriesZ& s);                // s(x^2)
SeriesZ invert_unit(const SeriesZ& s);                      // needs s(0) = +-1
SeriesZ geometric(std::size_t m, std::size_t order);        // 1 / (1 - x^m)
SeriesZ div_one_minus_xm(SeriesZ s, std::size_t m);         // s / (1 - x^m), O(N)
SeriesZ mul_one_minus_xm(const SeriesZ& s, std::size_t m);  // s * (1 - x^m), O(N)

class SeriesF2 {
 public:
  explicit SeriesF2(std::size_t order = 0);

  std::size_t order() const { return order_; }
  bool operator[](std::size_t n) const { return (words_[n / 64] >> (n % 64)) & 1u; }
  void set(std::size_t n, bool bit);

  bool is_zero() const;
  bool operator==(const SeriesF2& o) const { return order_ == o.order_ && words_ == o.words_; }

  SeriesF2& operator+=(const SeriesF2& o);
  // b shifted by e positions added in (truncated)
  void add_shifted(const SeriesF2& b, std::size_t e);

 private:
  void trim();
  std::size_t order_;
  std::vector<std::uint64_t> words_;
};

SeriesF2 operator+(SeriesF2 a, const SeriesF2& b);
SeriesF2 operator*(const SeriesF2& a, const SeriesF2& b);
SeriesF2 substitute_square(const SeriesF2& s);
SeriesF2 invert_unit(const SeriesF2& s);  // needs s(0) = 1
SeriesF2 div_one_minus_xm(const SeriesF2& s, std::size_t m);
SeriesF2 mul_one_minus_xm(const SeriesF2& s, std::size_t m);
SeriesF2 reduce_mod2(const SeriesZ& s);

// Generating functions through order N.
SeriesZ h_series(std::size_t order);              // H(x) = sum h_{1,1}(n) x^n
SeriesZ hb_series(std::int64_t b, std::size_t order);
SeriesZ bin_series(std::size_t order);            // B(x)
SeriesZ ptm_series(std::size_t order);            // T(x)
SeriesF2 g_series(std::size_t order);             // H mod 2, built from r_direct
SeriesF2 gb_series(std::int64_t b, std::size_t order);

// Residuals; each is identically zero when the identity holds.
SeriesZ h_equation_residual(std::size_t order);
SeriesZ hb_equation_residual(std::int64_t b, std::size_t order);
SeriesF2 g_algebraic_residual(std::size_t order);
SeriesF2 g_frobenius_residual(std::size_t order);  // G(x^2) - G(x)^2
SeriesF2 fb_residual(std::int64_t b, std::size_t order);
SeriesZ bin_functional_residual(std::size_t order);  // (1-x)B(x) - B(x^2)
SeriesZ ptm_bin_residual(std::size_t order);         // T(x)B(x) - 1

bool check_H_equation(std::size_t order);
bool check_Hb_equation(std::int64_t b, std::size_t order);
bool check_G_algebraic(std::size_t order);
bool check_fb_algebraic(std::int64_t b, std::size_t order);

// Even part of H equals H(x^2)/(1-x^2); odd part equals x/(1-x^2)^2.
bool check_H_parity_split(std::size_t order);

struct Decomposition {
  std::vector<BigInt> d;  // coefficients of sum_i Hbar_i
  std::size_t pieces = 0; // number of Hbar_i summed
  bool ok = false;
};

// H = B(x^2) + sum_{i>=1} x^(2^(i-1)) / (prod_{j<=i} (1 - x^(2^j)) (1 - x^(2^i)))
// and h(2n) = bin(n) + d(2n), through order N.
Decomposition decompose_H(std::size_t order);

struct RationalityReport {
  std::size_t order = 0;
  bool periodic = false;
  std::size_t preperiod = 0;
  std::size_t period = 0;
};

// Smallest period <= max_period (then smallest preperiod <= max_preperiod)
// under which the available coefficients are eventually periodic.
RationalityReport rationality_evidence(const SeriesF2& s, std::size_t max_period,
                                       std::size_t max_preperiod);

// CSV "n,coefficient".
void write_series_csv(std::ostream& out, const SeriesZ& s);
void write_series_csv(std::ostream& out, const SeriesF2& s);

}  // namespace metafib
