#include "ppval/exact_oracle.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "ppval/errors.hpp"

namespace ppval {
namespace {

// Collects factors of a ratio; numerator and denominator stay separate.
struct FactorLists {
    std::vector<std::uint64_t> numerator;
    std::vector<std::uint64_t> denominator;

    void add(std::uint64_t num, std::uint64_t den) {
        numerator.push_back(num);
        denominator.push_back(den);
    }

    ExactRatio ratio() const { return make_ratio(product_of(numerator), product_of(denominator)); }

    BigInt exact_quotient(std::string_view what) const {
        const BigInt num = product_of(numerator);
        const BigInt den = product_of(denominator);
        BigInt quotient;
        BigInt remainder;
        mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (sgn(remainder) != 0)
            throw NonIntegerProduct(std::string(what) + " product is not an integer");
        return quotient;
    }
};

FactorLists pp_factors(std::uint64_t n) {
    FactorLists f;
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = 1; j <= n; ++j)
            for (std::uint64_t k = 1; k <= n; ++k) f.add(i + j + k - 1, i + j + k - 2);
    return f;
}

FactorLists spp_factors(std::uint64_t n) {
    FactorLists f;
    for (std::uint64_t j = 1; j <= n; ++j)
        for (std::uint64_t i = j; i <= n; ++i) f.add(i + j + n - 1, i + j - 1);
    return f;
}

FactorLists tspp_factors(std::uint64_t n) {
    FactorLists f;
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = i; j <= n; ++j)
            for (std::uint64_t k = j; k <= n; ++k) f.add(i + j + k - 1, i + j + k - 2);
    return f;
}

// Half-index n: the cube has side 2n.
FactorLists tsscpp_factors(std::uint64_t n) {
    FactorLists f;
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = i; j <= n; ++j) f.add(i + j + n - 1, i + j + i - 1);
    return f;
}

}  // namespace

std::string_view family_name(Family family) noexcept {
    switch (family) {
        case Family::PP: return "pp";
        case Family::SPP: return "spp";
        case Family::TSPP: return "tspp";
        case Family::TSSCPP: return "tsscpp";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (Family f : {Family::PP, Family::SPP, Family::TSPP, Family::TSSCPP})
        if (lower == family_name(f)) return f;
    return std::nullopt;
}

BigInt count_family(Family family, std::uint64_t cube_size) {
    switch (family) {
        case Family::PP: return pp_factors(cube_size).exact_quotient("PP");
        case Family::SPP: return spp_factors(cube_size).exact_quotient("SPP");
        case Family::TSPP: return tspp_factors(cube_size).exact_quotient("TSPP");
        case Family::TSSCPP:
            if (cube_size % 2 != 0) throw OddCubeForTSSCPP(cube_size);
            return tsscpp_factors(cube_size / 2).exact_quotient("TSSCPP");
    }
    throw std::invalid_argument("unknown family");
}

ExactRatio middle_term_direct(std::uint64_t n) {
    FactorLists f;
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = i + 1; j <= n; ++j)
            for (std::uint64_t k = 1; k <= n; ++k) f.add(i + j + k - 1, i + j + k - 2);
    return f.ratio();
}

ExactRatio middle_term_boundary(std::uint64_t n) {
    FactorLists f;
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = i + 1; j <= n; ++j) f.add(i + j + n - 1, i + j - 1);
    return f.ratio();
}

ExactRatio middle_term_telescoped(std::uint64_t n) {
    FactorLists f;
    for (std::uint64_t i = 1; i <= n; ++i) f.add(2 * i - 1, 2 * i + n - 1);
    return ExactRatio(count_family(Family::SPP, n)) * f.ratio();
}

ExactRatio middle_term(std::uint64_t n) {
    ExactRatio direct = middle_term_direct(n);
    if (direct != middle_term_telescoped(n))
        throw std::logic_error("middle term: direct and telescoped products disagree at n = " +
                               std::to_string(n));
    return direct;
}

ExactRatio third_term_direct(std::uint64_t n) {
    FactorLists f;
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = i; j <= n; ++j)
            for (std::uint64_t k = 1; k < j; ++k) f.add(i + j + k - 1, i + j + k - 2);
    return f.ratio();
}

ExactRatio third_term(std::uint64_t n) {
    std::vector<std::uint64_t> num;
    std::vector<std::uint64_t> den;
    for (std::uint64_t j = 2; j <= n; ++j) {
        for (std::uint64_t m = 2 * j; m <= 3 * j - 2; ++m) num.push_back(m);
        for (std::uint64_t m = j; m <= 2 * j - 2; ++m) den.push_back(m);
    }
    return make_ratio(product_of(num), product_of(den));
}

BigInt odd_boundary_product(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    factors.reserve(n);
    for (std::uint64_t i = 1; i <= n; ++i) factors.push_back(2 * i + n - 1);
    return product_of(factors);
}

DecompositionReport decomposition_check(std::uint64_t n) {
    DecompositionReport report;
    report.n = n;
    report.pp = count_family(Family::PP, n);
    try {
        report.rhs = ExactRatio(count_family(Family::TSPP, n)) * middle_term(n) * third_term(n);
    } catch (const std::logic_error&) {
        return report;
    }
    report.holds = report.rhs == ExactRatio(report.pp);
    return report;
}

}  // namespace ppval
