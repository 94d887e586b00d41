#pragma once

// Arbitrary-precision integer and rational types used across the library.
// Both are thin aliases over GMP's C++ classes; ExactRatio is kept canonical
// (reduced, positive denominator) by construction through canonicalize().

#include <cstdint>
#include <span>
#include <string>

#include <gmpxx.h>

namespace ppval {

using BigInt = mpz_class;
using ExactRatio = mpq_class;

BigInt to_big(std::uint64_t value);

/// Builds a reduced ratio from a numerator/denominator pair.
ExactRatio make_ratio(const BigInt& numerator, const BigInt& denominator);

/// Product of all factors, multiplied pairwise in a balanced tree so the
/// operands of each multiplication stay similar in size.
BigInt product_of(std::span<const std::uint64_t> factors);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const BigInt& value);
std::string to_string(const ExactRatio& value);

}  // namespace ppval
