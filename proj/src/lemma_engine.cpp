#include "ppval/lemma_engine.hpp"

#include <bit>
#include <sstream>

#include "ppval/digit_core.hpp"
#include "ppval/errors.hpp"

namespace ppval {
namespace {

ExactRatio ratio(std::int64_t num, std::int64_t den) {
    ExactRatio r(static_cast<long>(num), static_cast<unsigned long>(den));
    r.canonicalize();
    return r;
}

}  // namespace

DigitFrame::DigitFrame(std::uint64_t k) : k_(k) {
    if (k == 0) throw DomainError("digit frame requires k >= 1");
    for (unsigned b = 0; b < 64; ++b)
        if ((k >> b) & 1U) bits_.push_back(b);
}

std::uint64_t DigitFrame::k_minus() const noexcept { return k_ - (std::uint64_t{1} << top_bit()); }

std::uint64_t DigitFrame::k_below(unsigned b) const noexcept {
    if (b >= 63) return k_;
    return k_ & ((std::uint64_t{1} << (b + 1)) - 1);
}

std::int64_t add_direct(std::uint64_t k, unsigned b) {
    if (k == 0) throw DomainError("add_direct requires k >= 1");
    return static_cast<std::int64_t>(ones_in_column(2 * k, 3 * k - 1, b)) -
           static_cast<std::int64_t>(ones_in_column(0, k - 1, b));
}

ExactRatio add_piecewise_top(std::uint64_t k) {
    const DigitFrame frame(k);
    const std::int64_t km = static_cast<std::int64_t>(frame.k_minus());
    const std::int64_t p = std::int64_t{1} << frame.top_bit();
    if (km == 0) return 0;
    // x = km / p; compare 3km with p, 2km with p, 3km with 2p.
    if (3 * km < p) return ratio(2 * km, 1);
    if (2 * km <= p) return ratio(p - km, 1);
    if (3 * km < 2 * p) return ratio(2 * p - 3 * km, 1);
    return 0;
}

ExactRatio add_piecewise_low(std::uint64_t k, unsigned b) {
    const DigitFrame frame(k);
    if (b >= frame.top_bit()) throw DomainError("add_piecewise_low requires b < top bit of k");
    const std::int64_t kb = static_cast<std::int64_t>(frame.k_below(b));
    const std::int64_t half = std::int64_t{1} << b;  // 2^b
    const std::int64_t p = 2 * half;                 // 2^(b+1); x = kb / p
    // Branch tests cross-multiplied against p; values scaled by 2^b.
    if (6 * kb < p) return 0;
    if (3 * kb < p) return ratio(3 * kb - half, 3);          // 2^b (2x - 1/3)
    if (2 * kb < p) return ratio(half - kb, 1);              // 2^b (1 - 2x)
    if (3 * kb < 2 * p) return ratio(2 * kb - 2 * half, 1);  // 2^b (-2 + 4x)
    if (6 * kb < 5 * p) return ratio(10 * half - 6 * kb, 3); // 2^b (10/3 - 4x)
    return 0;
}

AddProfile add_profile(std::uint64_t k, unsigned b) {
    const DigitFrame frame(k);
    if (b > frame.top_bit()) throw DomainError("add_profile requires b <= top bit of k");
    AddProfile out;
    out.column = b;
    out.direct_low = ones_in_column(0, k - 1, b);
    out.direct_high = ones_in_column(2 * k, 3 * k - 1, b);
    out.add_direct = static_cast<std::int64_t>(out.direct_high) - static_cast<std::int64_t>(out.direct_low);
    out.add_piecewise = b == frame.top_bit() ? add_piecewise_top(k) : add_piecewise_low(k, b);
    return out;
}

std::uint64_t beyond_top_contribution(std::uint64_t k) {
    const DigitFrame frame(k);
    std::uint64_t total = 0;
    for (unsigned b = frame.top_bit() + 1; b < 64; ++b) total += ones_in_column(2 * k, 3 * k - 1, b);
    return total;
}

bool single_bit_above_top(std::uint64_t k) {
    const DigitFrame frame(k);
    const unsigned shift = frame.top_bit() + 1;
    const std::uint64_t first = frame.high_first() >> shift;
    const std::uint64_t last = frame.high_last() >> shift;
    for (std::uint64_t v = first; v <= last; ++v)
        if (std::popcount(v) != 1) return false;
    return true;
}

std::string render_frame(std::uint64_t k) {
    if (k > kRenderCap) throw RenderCapExceeded("render_frame: k exceeds 2^20");
    const DigitFrame frame(k);
    const unsigned top = frame.top_bit();
    const unsigned columns = top + 3;
    const std::size_t label_width = std::to_string(frame.high_last()).size();
    const std::size_t cell = std::to_string(columns - 1).size();

    auto pad = [](const std::string& s, std::size_t width) {
        return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
    };
    auto row = [&](const std::string& label, auto&& cell_text) {
        std::string out = pad(label, label_width) + " |";
        for (unsigned b = 0; b < columns; ++b) {
            if (b == top || b == top + 1) out += " |";
            out += ' ' + pad(cell_text(b), cell);
        }
        return out + " |";
    };
    auto number_row = [&](std::uint64_t m) {
        return row(std::to_string(m), [m](unsigned b) { return std::string(1, ((m >> b) & 1U) ? '1' : '0'); });
    };
    const std::string header = row("", [](unsigned b) { return std::to_string(b); });
    const std::string rule(header.size(), '-');
    // Marks the start of the second run in column i_r, 2^{i_r} rows in.
    const std::uint64_t split = std::uint64_t{1} << top;
    const std::string gap = "    ";

    std::ostringstream os;
    os << "k = " << k << ": low window [0, " << frame.low_last() << "], high window ["
       << frame.high_first() << ", " << frame.high_last() << "]\n";
    os << header << gap << header << '\n';
    os << rule << gap << rule << '\n';
    for (std::uint64_t r = 0; r < k; ++r) {
        if (r == split && split < k) {
            const std::string dashes =
                std::string(label_width, ' ') + " |" + std::string(header.size() - label_width - 2, '.');
            os << dashes << gap << dashes << '\n';
        }
        os << number_row(frame.low_first() + r) << gap << number_row(frame.high_first() + r) << '\n';
    }
    os << rule << gap << rule << '\n';
    return os.str();
}

}  // namespace ppval
