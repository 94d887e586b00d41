#include "ppval/digit_core.hpp"

#include <bit>

#include "ppval/errors.hpp"

namespace ppval {
namespace {

using u128 = unsigned __int128;

// Ones in column b over [0, count - 1].
u128 column_prefix(u128 count, unsigned b) {
    if (b >= 127) return 0;
    const u128 half = u128{1} << b;
    const u128 period = half << 1;
    const u128 full = (count / period) * half;
    const u128 rest = count % period;
    return full + (rest > half ? rest - half : 0);
}

BigInt column_prefix(const BigInt& count, unsigned b) {
    BigInt full;
    mpz_fdiv_q_2exp(full.get_mpz_t(), count.get_mpz_t(), b + 1);
    mpz_mul_2exp(full.get_mpz_t(), full.get_mpz_t(), b);
    BigInt rest;
    mpz_fdiv_r_2exp(rest.get_mpz_t(), count.get_mpz_t(), b + 1);
    BigInt half;
    mpz_setbit(half.get_mpz_t(), b);
    if (rest > half) full += rest - half;
    return full;
}

}  // namespace

DigitSum s2(std::uint64_t m) noexcept { return static_cast<DigitSum>(std::popcount(m)); }

DigitSum s2(const BigInt& m) {
    if (sgn(m) < 0) throw DomainError("s2 of a negative integer");
    return mpz_popcount(m.get_mpz_t());
}

Valuation v2(std::uint64_t m) {
    if (m == 0) throw DomainError("v2(0) is undefined");
    return static_cast<Valuation>(std::countr_zero(m));
}

Valuation v2(const BigInt& m) {
    if (sgn(m) == 0) throw DomainError("v2(0) is undefined");
    return mpz_scan1(m.get_mpz_t(), 0);
}

Valuation v2_factorial(std::uint64_t m) noexcept { return m - s2(m); }

BigInt v2_factorial(const BigInt& m) {
    if (sgn(m) < 0) throw DomainError("factorial of a negative integer");
    return m - to_big(s2(m));
}

std::uint64_t ones_in_column(std::uint64_t lo, std::uint64_t hi, unsigned b) {
    if (u128{lo} > u128{hi} + 1) throw DomainError("ones_in_column: lo > hi + 1");
    return static_cast<std::uint64_t>(column_prefix(u128{hi} + 1, b) - column_prefix(lo, b));
}

BigInt ones_in_column(const BigInt& lo, const BigInt& hi, unsigned b) {
    if (sgn(lo) < 0) throw DomainError("ones_in_column: negative bound");
    if (lo > hi + 1) throw DomainError("ones_in_column: lo > hi + 1");
    return column_prefix(BigInt(hi + 1), b) - column_prefix(lo, b);
}

std::uint64_t ones_below(std::uint64_t count) noexcept {
    std::uint64_t total = 0;
    for (unsigned b = 0; b < 64 && (std::uint64_t{1} << b) < count; ++b)
        total += static_cast<std::uint64_t>(column_prefix(count, b));
    return total;
}

}  // namespace ppval
