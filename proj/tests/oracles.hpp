#pragma once

// Brute-force references used only by the tests. Nothing here calls into
// the library's closed forms or column counters.

#include <cstdint>
#include <vector>

namespace ppval::testing {

inline std::uint64_t popcount_loop(std::uint64_t m) {
    std::uint64_t c = 0;
    for (; m != 0; m >>= 1) c += m & 1U;
    return c;
}

inline std::uint64_t valuation_by_division(std::uint64_t m) {
    std::uint64_t e = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++e;
    }
    return e;
}

inline std::uint64_t column_count_loop(std::uint64_t lo, std::uint64_t hi, unsigned b) {
    std::uint64_t c = 0;
    for (std::uint64_t m = lo; m <= hi; ++m) c += (m >> b) & 1U;
    return c;
}

// D(k) summed term by term.
inline std::int64_t digit_excess_loop(std::uint64_t k) {
    std::int64_t total = 0;
    for (std::uint64_t j = 0; j < k; ++j)
        total += static_cast<std::int64_t>(popcount_loop(j + 2 * k)) - static_cast<std::int64_t>(popcount_loop(j));
    return total;
}

// prefix[x] = sum_{j<x} s2(j), by direct popcounts.
class DigitSumPrefix {
public:
    explicit DigitSumPrefix(std::uint64_t limit) : prefix_(limit + 1, 0) {
        for (std::uint64_t x = 1; x <= limit; ++x)
            prefix_[x] = prefix_[x - 1] + static_cast<std::int64_t>(__builtin_popcountll(x - 1));
    }

    // Digit-sum total over [lo, hi).
    std::int64_t range(std::uint64_t lo, std::uint64_t hi) const { return prefix_[hi] - prefix_[lo]; }

    std::int64_t digit_excess(std::uint64_t k) const { return range(2 * k, 3 * k) - range(0, k); }

private:
    std::vector<std::int64_t> prefix_;
};

}  // namespace ppval::testing
