#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace metafib {

using BigInt = mpz_class;
using Index = std::int64_t;

std::string to_decimal(const BigInt& v);

// Throws std::invalid_argument on anything that is not an optionally signed
// run of decimal digits.
BigInt parse_decimal(std::string_view text);

// Number of bits in |v|; 0 for v == 0.
std::size_t bit_length(const BigInt& v);

// v as a signed 64-bit index, or nullopt if it does not fit.
std::optional<Index> to_index(const BigInt& v);

BigInt from_index(Index v);

}  // namespace metafib
