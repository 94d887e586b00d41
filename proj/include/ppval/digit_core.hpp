#pragma once

// Binary digit sums and 2-adic valuations.
//
// Every operation has a machine-word overload (used by the sweeps) and an
// arbitrary-precision overload; both agree wherever the input fits in 64 bits.

#include <cstdint>

#include "ppval/bigint.hpp"

namespace ppval {

/// Exponent of 2 in a positive integer.
using Valuation = std::uint64_t;
/// Number of set bits in a nonnegative integer.
using DigitSum = std::uint64_t;

/// s_2(m): number of ones in the binary expansion of m.
DigitSum s2(std::uint64_t m) noexcept;
/// Throws DomainError for negative m.
DigitSum s2(const BigInt& m);

/// v_2(m): largest e with 2^e | m. Throws DomainError for m == 0, which has
/// no finite valuation.
Valuation v2(std::uint64_t m);
Valuation v2(const BigInt& m);

/// Legendre: v_2(m!) = m - s_2(m).
Valuation v2_factorial(std::uint64_t m) noexcept;
BigInt v2_factorial(const BigInt& m);

/// Count of integers in [lo, hi] whose bit b is set, in O(1).
///
/// Column b repeats with period 2^(b+1): 2^b zeros followed by 2^b ones.
/// An empty range (lo == hi + 1) yields 0; lo > hi + 1 is a DomainError.
std::uint64_t ones_in_column(std::uint64_t lo, std::uint64_t hi, unsigned b);
BigInt ones_in_column(const BigInt& lo, const BigInt& hi, unsigned b);

/// Total number of ones over all integers in [0, count - 1].
std::uint64_t ones_below(std::uint64_t count) noexcept;

}  // namespace ppval
