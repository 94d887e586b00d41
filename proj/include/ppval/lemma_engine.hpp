#pragma once

// Column-by-column accounting of the digit excess D(k).
//
// The windows [0, k-1] and [2k, 3k-1] are compared one bit column at a time.
// Columns above the top bit i_r of k contribute exactly k ones to the high
// window; column i_r and the columns below it contribute add(b) each. The
// engine reports the direct counts next to the piecewise-linear profiles so
// the two can be compared.

#include <cstdint>
#include <string>
#include <vector>

#include "ppval/bigint.hpp"

namespace ppval {

class DigitFrame {
public:
    /// Throws DomainError for k == 0.
    explicit DigitFrame(std::uint64_t k);

    std::uint64_t k() const noexcept { return k_; }
    /// Ascending set-bit indices i_1 < ... < i_r.
    const std::vector<unsigned>& bit_positions() const noexcept { return bits_; }
    unsigned top_bit() const noexcept { return bits_.back(); }
    /// k with its top bit cleared.
    std::uint64_t k_minus() const noexcept;
    /// Sum of the set bits of k at positions <= b, i.e. k mod 2^(b+1).
    std::uint64_t k_below(unsigned b) const noexcept;
    bool is_power_of_two() const noexcept { return bits_.size() == 1; }

    std::uint64_t low_first() const noexcept { return 0; }
    std::uint64_t low_last() const noexcept { return k_ - 1; }
    std::uint64_t high_first() const noexcept { return 2 * k_; }
    std::uint64_t high_last() const noexcept { return 3 * k_ - 1; }

private:
    std::uint64_t k_;
    std::vector<unsigned> bits_;
};

struct AddProfile {
    unsigned column = 0;
    std::uint64_t direct_low = 0;
    std::uint64_t direct_high = 0;
    std::int64_t add_direct = 0;
    ExactRatio add_piecewise;
};

/// Extra ones in column b of the high window over the low window.
std::int64_t add_direct(std::uint64_t k, unsigned b);

/// Four-branch profile for the top column, 2^{i_r} * f(k^- / 2^{i_r}):
///   2x on x < 1/3, 1 - x on 1/3 <= x <= 1/2, 2 - 3x on 1/2 < x < 2/3, 0 above.
/// Powers of two give 0.
ExactRatio add_piecewise_top(std::uint64_t k);

/// Six-branch profile for a column b < i_r, 2^b * g(k_b / 2^{b+1}), with the
/// half-open breakpoints 1/6, 1/3, 1/2, 2/3, 5/6. Throws DomainError unless
/// k >= 1 and b < top_bit.
ExactRatio add_piecewise_low(std::uint64_t k, unsigned b);

/// Both counts and both profiles for one column (b <= top_bit). The
/// piecewise value is the top profile at b == top_bit, the low one below.
AddProfile add_profile(std::uint64_t k, unsigned b);

/// Ones above column i_r over the high window, counted per column.
std::uint64_t beyond_top_contribution(std::uint64_t k);

/// True when every m in [2k, 3k-1] has exactly one set bit above i_r.
/// Checks each distinct value of m >> (i_r + 1) once.
bool single_bit_above_top(std::uint64_t k);

inline constexpr std::uint64_t kRenderCap = std::uint64_t{1} << 20;

/// Side-by-side binary table of the low and high windows, columns 0..i_r+2,
/// with column groups [0, i_r) | i_r | above and a rule 2^{i_r} rows into each
/// window. Throws RenderCapExceeded for k > 2^20.
std::string render_frame(std::uint64_t k);

}  // namespace ppval
