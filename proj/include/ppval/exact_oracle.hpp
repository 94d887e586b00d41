#pragma once

// Brute-force exact evaluation of the four plane-partition product formulas
// and of the two factors that relate PP_n to TSPP_n.
//
// Numerators and denominators are accumulated as separate big integers and
// divided once at the end. The full PP product has n^3 factors, so this
// module is meant for cube sizes up to kOracleCap; the closed forms take
// over beyond that.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ppval/bigint.hpp"

namespace ppval {

enum class Family { PP, SPP, TSPP, TSSCPP };

inline constexpr std::uint64_t kOracleCap = 60;

std::string_view family_name(Family family) noexcept;
/// Case-insensitive: "pp", "spp", "tspp", "tsscpp".
std::optional<Family> parse_family(std::string_view name) noexcept;

/// Exact number of plane partitions of the family inside a cube of the given
/// side. TSSCPP takes the (even) cube size and evaluates its formula at
/// half that size. Size 0 is the empty product, 1, for every family.
///
/// Throws OddCubeForTSSCPP, or NonIntegerProduct if the final division
/// leaves a remainder.
BigInt count_family(Family family, std::uint64_t cube_size);

/// prod_{1<=i<j<=n} prod_{k=1}^{n} (i+j+k-1)/(i+j+k-2), factor by factor.
ExactRatio middle_term_direct(std::uint64_t n);
/// prod_{1<=i<j<=n} (i+j+n-1)/(i+j-1): the product after cancelling along k.
ExactRatio middle_term_boundary(std::uint64_t n);
/// SPP_n * prod_{i=1}^{n} (2i-1)/(2i+n-1).
ExactRatio middle_term_telescoped(std::uint64_t n);

/// The middle factor. Evaluated by the direct and telescoped routes; a
/// disagreement throws std::logic_error.
ExactRatio middle_term(std::uint64_t n);

/// prod_{i=1}^{n} prod_{j=i}^{n} prod_{k=1}^{j-1} (i+j+k-1)/(i+j+k-2).
ExactRatio third_term_direct(std::uint64_t n);
/// prod_{j=1}^{n} [(2j)(2j+1)...(3j-2)] / [j(j+1)...(2j-2)].
ExactRatio third_term(std::uint64_t n);

/// prod_{i=1}^{n} (2i+n-1).
BigInt odd_boundary_product(std::uint64_t n);

struct DecompositionReport {
    std::uint64_t n = 0;
    bool holds = false;
    BigInt pp;
    ExactRatio rhs;  // TSPP_n * middle * third
};

/// Checks PP_n = TSPP_n * middle_term(n) * third_term(n). Never throws on a
/// mismatch; the report carries both sides.
DecompositionReport decomposition_check(std::uint64_t n);

}  // namespace ppval
