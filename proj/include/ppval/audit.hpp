#pragma once

// Step-by-step numerical audit of the displayed valuation identities, plus
// the series and summary statistics behind the relative-size conjectures.
//
// Each check compares the two sides of one printed equality over an index
// range. Integer sides come from digit sums or from factor-by-factor
// valuations of the raw products (the `direct` functions below), which never
// go through Legendre's formula. Exact checks compare big rationals and are
// capped at kExactAuditCap.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ppval/bigint.hpp"

namespace ppval {

namespace direct {

// Sum of v2 over every factor of the raw product formula.
std::int64_t v2_pp(std::uint64_t n);
std::int64_t v2_spp(std::uint64_t n);
std::int64_t v2_tspp(std::uint64_t n);
std::int64_t v2_tsscpp(std::uint64_t n);  // half index, cube 2n
std::int64_t v2_odd_boundary(std::uint64_t n);
std::int64_t v2_third(std::uint64_t n);

}  // namespace direct

inline constexpr std::uint64_t kExactAuditCap = 50;
inline constexpr std::size_t kMaxCounterexamples = 5;

enum class CheckStatus { Holds, Fails };

std::string_view status_name(CheckStatus status) noexcept;

struct Counterexample {
    std::uint64_t n = 0;
    std::string lhs;
    std::string rhs;
};

struct IndexRange {
    enum class Step { All, Even, Odd };

    std::uint64_t first = 0;
    std::uint64_t last = 0;
    Step step = Step::All;

    bool contains(std::uint64_t n) const noexcept;
    /// "[3,200] odd"
    std::string to_string() const;
};

struct IdentityCheck {
    std::string id;
    std::string description;
    IndexRange range;
    CheckStatus expected = CheckStatus::Holds;
    CheckStatus status = CheckStatus::Holds;
    /// Present iff status == Fails.
    std::optional<Counterexample> first_counterexample;
    /// Up to kMaxCounterexamples failures in index order.
    std::vector<Counterexample> counterexamples;
    std::uint64_t failures = 0;

    bool as_expected() const noexcept { return status == expected; }
};

/// Runs every check up to n_max (n_max >= 3). Never stops on a failing check.
std::vector<IdentityCheck> audit(std::uint64_t n_max);

/// id<TAB>range<TAB>status<TAB>counterexample ("n=3 lhs=-2 rhs=0" or empty).
std::string audit_line(const IdentityCheck& check);
/// One JSON object per check, in a top-level array.
std::string audit_json(const std::vector<IdentityCheck>& checks);

struct SeriesRecord {
    std::uint64_t cube = 0;
    std::int64_t v2_pp = 0;
    std::int64_t v2_spp = 0;
    std::int64_t v2_tspp = 0;
    std::optional<std::int64_t> v2_tsscpp;  // even cubes only
    std::int64_t diff = 0;                  // v2_pp - v2_tspp
    std::optional<ExactRatio> ratio_even;   // 5 v2_tsscpp / diff, even cube with diff > 0
    std::optional<std::int64_t> odd_margin; // diff + 3 (cube+1)/2, odd cubes
};

/// One record per cube in [1, cube_max] (cube_max >= 2), from the closed forms.
std::vector<SeriesRecord> series(std::uint64_t cube_max);

inline constexpr const char* kSeriesHeader = "cube,v2_pp,v2_spp,v2_tspp,v2_tsscpp,diff,ratio_even,odd_margin";
void write_series_csv(std::ostream& out, const std::vector<SeriesRecord>& records);

struct RatioStats {
    ExactRatio max;
    std::vector<std::uint64_t> argmax;  // cubes attaining max
};

/// Maximum of ratio_even over even cubes in [2, cube_max].
RatioStats even_ratio_stats(std::uint64_t cube_max);

struct MinimaViolation {
    std::uint64_t cube = 0;
    std::int64_t diff = 0;
    std::int64_t bound = 0;  // -3n for cube 2n-1
};

struct MinimaReport {
    std::uint64_t checked = 0;
    std::vector<MinimaViolation> violations;
    std::vector<std::uint64_t> on_line;  // cubes with diff == -3n
};

/// Checks diff >= -3n for every odd cube 2n-1 in [3, cube_max].
MinimaReport odd_minima(std::uint64_t cube_max);

struct TsscppProfile {
    unsigned m = 0;
    std::uint64_t first = 0;  // ceil(2^(m+1) / 3)
    std::uint64_t last = 0;   // floor(2^(m+2) / 3)
    std::int64_t max = 0;
    std::vector<std::uint64_t> argmax;
    std::int64_t target = 0;  // nearest integer to 2^m / 3

    bool matches() const noexcept { return max == target; }
};

/// Max of v2_tsscpp(n) for n in [2/3 2^m, 4/3 2^m]; requires 2 <= m <= 14.
TsscppProfile tsscpp_max_profile(unsigned m);

}  // namespace ppval
