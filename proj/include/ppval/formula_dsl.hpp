#pragma once

// A small language for lattice products of ratios of linear forms:
//
//   prod i,j,k : 1<=i<=j<=k<=n : (i+j+k-1)/(i+j+k-2)
//
// Grammar (EBNF):
//
//   formula     = "prod" variables ":" constraints ":" ratio ;
//   variables   = var { "," var } ;                 (* distinct, from i j k *)
//   constraints = chain { "," chain } ;
//   chain       = linear cmp linear { cmp linear } ;
//   cmp         = "<=" | "<" | "=" ;
//   ratio       = "(" linear ")" "/" "(" linear ")" ;
//   linear      = [ "+" | "-" ] term { ( "+" | "-" ) term } ;
//   term        = integer [ [ "*" ] name ] | name ;
//   name        = var | "n" ;
//
// Variables are enumerated in declaration order. Each variable's range is
// solved from the constraints after eliminating the variables declared after
// it, so every variable must end up with both a lower and an upper bound.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ppval/bigint.hpp"
#include "ppval/exact_oracle.hpp"

namespace ppval {

enum class IndexVar : std::uint8_t { I = 0, J = 1, K = 2 };

/// c_i i + c_j j + c_k k + c_n n + constant.
struct LinearForm {
    std::array<std::int64_t, 3> index{};
    std::int64_t size = 0;
    std::int64_t constant = 0;

    std::int64_t coefficient(IndexVar v) const noexcept { return index[static_cast<std::size_t>(v)]; }
    std::int64_t evaluate(const std::array<std::int64_t, 3>& point, std::int64_t n) const noexcept;

    bool operator==(const LinearForm&) const = default;
};

enum class Comparison : std::uint8_t { Less, LessEqual, Equal };

/// a0 op0 a1 op1 a2 ...
struct ConstraintChain {
    std::vector<LinearForm> terms;
    std::vector<Comparison> ops;

    bool operator==(const ConstraintChain&) const = default;
};

struct FormulaSpec {
    std::vector<IndexVar> variables;
    std::vector<ConstraintChain> constraints;
    LinearForm numerator;
    LinearForm denominator;

    bool operator==(const FormulaSpec&) const = default;
};

/// Throws SyntaxError (with position and expected tokens) or UnboundedRegion.
FormulaSpec parse_formula(std::string_view text);

/// Canonical text; parse_formula(print_formula(s)) == s.
std::string print_formula(const FormulaSpec& spec);

/// Integral products come back as BigInt, the rest as a reduced ExactRatio.
using ProductValue = std::variant<BigInt, ExactRatio>;

/// Exact product over the lattice points of the region at size n.
/// Throws NonpositiveFactor if a factor evaluates to <= 0 in the region.
ProductValue evaluate(const FormulaSpec& spec, std::uint64_t n);

/// sum over the region of v_p(numerator) - v_p(denominator), factor by
/// factor. Throws DomainError if p is not prime, NonpositiveFactor as above.
std::int64_t valuate(const FormulaSpec& spec, std::uint64_t n, std::uint64_t p);

/// Built-in family formulas. TSSCPP is written in its half index: evaluating
/// it at n counts TSSCPP in the cube of side 2n.
std::string_view builtin_formula_text(Family family) noexcept;
const FormulaSpec& builtin_formula(Family family);

}  // namespace ppval
