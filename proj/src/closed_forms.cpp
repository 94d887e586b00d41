#include "ppval/closed_forms.hpp"

#include "ppval/digit_core.hpp"
#include "ppval/errors.hpp"

namespace ppval {
namespace {

std::int64_t s(std::uint64_t m) noexcept { return static_cast<std::int64_t>(s2(m)); }
std::int64_t i64(std::uint64_t m) noexcept { return static_cast<std::int64_t>(m); }

}  // namespace

ParityCase ParityCase::of(std::uint64_t n) noexcept {
    return n % 2 == 0 ? ParityCase{Parity::Even, n / 2} : ParityCase{Parity::Odd, (n - 1) / 2};
}

std::uint64_t ParityCase::reconstruct() const noexcept {
    return parity == Parity::Even ? 2 * half_k : 2 * half_k + 1;
}

std::int64_t v2_pp(std::uint64_t n) {
    std::int64_t total = 0;
    for (std::uint64_t i = 1; i <= n; ++i) total += 2 * s(i + n - 1) - s(i + 2 * n - 1) - s(i - 1);
    return total;
}

std::int64_t v2_spp(std::uint64_t n) {
    std::int64_t total = i64(n);
    for (std::uint64_t j = 1; j <= n; ++j) total += s(2 * n - j) - s(3 * n + 1 - 2 * j);
    return total;
}

std::int64_t v2_tsscpp(std::uint64_t n) {
    std::int64_t total = 0;
    for (std::uint64_t j = 1; j <= n; ++j) total += s(j + n - 1) - s(3 * j - 2);
    return total;
}

std::int64_t v2_odd_boundary(std::uint64_t n) {
    if (n % 2 == 0) return 0;
    return 2 * i64(n) - s(3 * n - 1) + s(n - 1);
}

std::int64_t v2_third(std::uint64_t n) {
    std::int64_t total = i64(n);
    for (std::uint64_t j = 1; j <= n; ++j) total += s(j - 1) - s(3 * j - 2);
    return total;
}

std::int64_t v2_tspp(std::uint64_t n) {
    return v2_pp(n) - (v2_spp(n) - v2_odd_boundary(n)) - v2_third(n);
}

std::int64_t theorem_diff(std::uint64_t n) { return v2_pp(n) - v2_tspp(n); }

std::int64_t s_e(std::uint64_t k) {
    if (k == 0) throw DomainError("S_E(k) requires k >= 1");
    std::int64_t total = 2 * i64(k);
    for (std::uint64_t j = 0; j < k; ++j) total += s(j) - s(j + 2 * k);
    return total;
}

std::int64_t digit_excess(std::uint64_t k) {
    if (k == 0) throw DomainError("D(k) requires k >= 1");
    // ones in [2k, 3k-1] minus ones in [0, k-1]
    return i64(ones_below(3 * k)) - i64(ones_below(2 * k)) - i64(ones_below(k));
}

}  // namespace ppval
