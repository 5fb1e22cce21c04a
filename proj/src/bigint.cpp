#include "metafib/bigint.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace metafib {

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size())
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return BigInt(s, 10);
}

std::size_t bit_length(const BigInt& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::optional<Index> to_index(const BigInt& v) {
  // mpz_fits_slong_p is enough on LP64; keep the explicit bound for others.
  if (!mpz_fits_slong_p(v.get_mpz_t())) return std::nullopt;
  long x = mpz_get_si(v.get_mpz_t());
  if (x < std::numeric_limits<Index>::min() || x > std::numeric_limits<Index>::max())
    return std::nullopt;
  return static_cast<Index>(x);
}

BigInt from_index(Index v) {
  BigInt r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace metafib
