#include "ppval/bigint.hpp"

#include <vector>

namespace ppval {

BigInt to_big(std::uint64_t value) {
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
    return out;
}

ExactRatio make_ratio(const BigInt& numerator, const BigInt& denominator) {
    ExactRatio r(numerator, denominator);
    r.canonicalize();
    return r;
}

BigInt product_of(std::span<const std::uint64_t> factors) {
    if (factors.empty()) return BigInt(1);

    // Pack small factors into word-sized chunks first; the tree only sees
    // the chunks.
    std::vector<BigInt> level;
    level.reserve(factors.size() / 4 + 1);
    std::uint64_t chunk = 1;
    for (std::uint64_t f : factors) {
        if (f != 0 && chunk > UINT64_MAX / f) {
            level.push_back(to_big(chunk));
            chunk = f;
        } else {
            chunk *= f;
        }
    }
    level.push_back(to_big(chunk));

    while (level.size() > 1) {
        std::vector<BigInt> next;
        next.reserve(level.size() / 2 + 1);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
        if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
        level = std::move(next);
    }
    return level.front();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const ExactRatio& value) { return value.get_str(); }

}  // namespace ppval
