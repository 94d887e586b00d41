#pragma once

// Digit-sum closed forms for the 2-adic valuations of the plane-partition
// families and of the factors linking PP_n to TSPP_n.
//
// Each valuation is an O(n) sum of binary digit sums obtained from Legendre's
// formula after telescoping the product. All results are signed: several
// intermediate quantities (the theorem difference, S_E) change sign.

#include <cstdint>

namespace ppval {

enum class Parity { Even, Odd };

/// Splits n into its parity and the half index used by the even and odd
/// arguments: k = n/2 when n is even, k = (n-1)/2 when n is odd.
struct ParityCase {
    Parity parity;
    std::uint64_t half_k;

    static ParityCase of(std::uint64_t n) noexcept;
    std::uint64_t reconstruct() const noexcept;
};

/// sum_{i=1}^{n} 2 s2(i+n-1) - s2(i+2n-1) - s2(i-1)
std::int64_t v2_pp(std::uint64_t n);
/// n + sum_{j=1}^{n} s2(2n-j) - s2(3n+1-2j)
std::int64_t v2_spp(std::uint64_t n);
/// Valuation of TSSCPP in the cube of side 2n (n is the half index).
/// sum_{j=1}^{n} s2(j+n-1) - s2(3j-2)
std::int64_t v2_tsscpp(std::uint64_t n);
/// v2 of prod_{i=1}^{n} (2i+n-1): zero for even n, 2n - s2(3n-1) + s2(n-1)
/// for odd n.
std::int64_t v2_odd_boundary(std::uint64_t n);
/// n + sum_{j=1}^{n} s2(j-1) - s2(3j-2)
std::int64_t v2_third(std::uint64_t n);
/// v2_pp - (v2_spp - v2_odd_boundary) - v2_third.
std::int64_t v2_tspp(std::uint64_t n);

/// v2(PP_n) - v2(TSPP_n). Positive for even n >= 2, negative for odd n >= 3,
/// zero at n = 0 and n = 1.
std::int64_t theorem_diff(std::uint64_t n);

/// S_E(k) = 2k + sum_{j=0}^{k-1} s2(j) - s2(j+2k), summed term by term.
/// Requires k >= 1.
std::int64_t s_e(std::uint64_t k);

/// D(k) = sum_{j=0}^{k-1} s2(j+2k) - s2(j), from per-column one counts in
/// O(log k). Requires k >= 1.
std::int64_t digit_excess(std::uint64_t k);

}  // namespace ppval
