#include "ppval/audit.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <utility>

#include "json.hpp"
#include "ppval/closed_forms.hpp"
#include "ppval/digit_core.hpp"
#include "ppval/errors.hpp"
#include "ppval/exact_oracle.hpp"

namespace ppval {

namespace direct {
namespace {

std::int64_t v(std::uint64_t m) { return static_cast<std::int64_t>(ppval::v2(m)); }

}  // namespace

std::int64_t v2_pp(std::uint64_t n) {
    // The factor depends on (i, j) only through t = i + j, which occurs
    // min(t - 1, 2n + 1 - t) times.
    std::int64_t total = 0;
    for (std::uint64_t t = 2; t <= 2 * n; ++t) {
        const std::int64_t mult = static_cast<std::int64_t>(std::min(t - 1, 2 * n + 1 - t));
        std::int64_t per = 0;
        for (std::uint64_t k = 1; k <= n; ++k) per += v(t + k - 1) - v(t + k - 2);
        total += mult * per;
    }
    return total;
}

std::int64_t v2_spp(std::uint64_t n) {
    std::int64_t total = 0;
    for (std::uint64_t j = 1; j <= n; ++j)
        for (std::uint64_t i = j; i <= n; ++i) total += v(i + j + n - 1) - v(i + j - 1);
    return total;
}

std::int64_t v2_tspp(std::uint64_t n) {
    std::int64_t total = 0;
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = i; j <= n; ++j)
            for (std::uint64_t k = j; k <= n; ++k) total += v(i + j + k - 1) - v(i + j + k - 2);
    return total;
}

std::int64_t v2_tsscpp(std::uint64_t n) {
    std::int64_t total = 0;
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = i; j <= n; ++j) total += v(i + j + n - 1) - v(2 * i + j - 1);
    return total;
}

std::int64_t v2_odd_boundary(std::uint64_t n) {
    std::int64_t total = 0;
    for (std::uint64_t i = 1; i <= n; ++i) total += v(2 * i + n - 1);
    return total;
}

std::int64_t v2_third(std::uint64_t n) {
    std::int64_t total = 0;
    for (std::uint64_t j = 2; j <= n; ++j) {
        for (std::uint64_t m = 2 * j; m <= 3 * j - 2; ++m) total += v(m);
        for (std::uint64_t m = j; m <= 2 * j - 2; ++m) total -= v(m);
    }
    return total;
}

}  // namespace direct

std::string_view status_name(CheckStatus status) noexcept {
    return status == CheckStatus::Holds ? "Holds" : "Fails";
}

bool IndexRange::contains(std::uint64_t n) const noexcept {
    if (n < first || n > last) return false;
    switch (step) {
        case Step::All: return true;
        case Step::Even: return n % 2 == 0;
        case Step::Odd: return n % 2 == 1;
    }
    return false;
}

std::string IndexRange::to_string() const {
    std::string out = "[" + std::to_string(first) + "," + std::to_string(last) + "]";
    if (step == Step::Even) out += " even";
    if (step == Step::Odd) out += " odd";
    return out;
}

namespace {

using Sides = std::pair<std::string, std::string>;

std::int64_t s(std::uint64_t m) { return static_cast<std::int64_t>(s2(m)); }
std::int64_t i64(std::uint64_t m) { return static_cast<std::int64_t>(m); }

// Per-index valuations computed once from the raw products.
struct DirectTable {
    std::vector<std::int64_t> pp, tspp, tsscpp;

    explicit DirectTable(std::uint64_t n_max) {
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            pp.push_back(direct::v2_pp(n));
            tspp.push_back(direct::v2_tspp(n));
            tsscpp.push_back(direct::v2_tsscpp(n));
        }
    }

    std::int64_t diff(std::uint64_t n) const { return pp[n] - tspp[n]; }
};

// sum_{j=1}^{n} s2(2n-j) - s2(3n+1-2j) + s2(j-1) - s2(3j-2)
std::int64_t combined_sum(std::uint64_t n) {
    std::int64_t total = 0;
    for (std::uint64_t j = 1; j <= n; ++j) total += s(2 * n - j) - s(3 * n + 1 - 2 * j) + s(j - 1) - s(3 * j - 2);
    return total;
}

// sum_{j=1}^{n} s2(j-1) - s2(3n+1-2j)
std::int64_t subtracted_sum(std::uint64_t n) {
    std::int64_t total = 0;
    for (std::uint64_t j = 1; j <= n; ++j) total += s(j - 1) - s(3 * n + 1 - 2 * j);
    return total;
}

// sum_{j=lo}^{hi} s2(j) - s2(j + shift); empty when hi < lo
std::int64_t shifted_sum(std::int64_t lo, std::int64_t hi, std::uint64_t shift) {
    std::int64_t total = 0;
    for (std::int64_t j = lo; j <= hi; ++j)
        total += s(static_cast<std::uint64_t>(j)) - s(static_cast<std::uint64_t>(j) + shift);
    return total;
}

class Auditor {
public:
    explicit Auditor(std::uint64_t n_max) : n_max_(n_max), table_(n_max) {}

    std::vector<IdentityCheck> run() {
        exact_checks();
        valuation_checks();
        even_chain();
        odd_chain();
        return std::move(checks_);
    }

private:
    void add(std::string id, std::string description, IndexRange range, CheckStatus expected,
             const std::function<Sides(std::uint64_t)>& sides) {
        IdentityCheck check;
        check.id = std::move(id);
        check.description = std::move(description);
        check.range = range;
        check.expected = expected;
        for (std::uint64_t n = range.first; n <= range.last; ++n) {
            if (!range.contains(n)) continue;
            auto [lhs, rhs] = sides(n);
            if (lhs == rhs) continue;
            ++check.failures;
            if (check.counterexamples.size() < kMaxCounterexamples)
                check.counterexamples.push_back({n, std::move(lhs), std::move(rhs)});
        }
        if (check.failures > 0) {
            check.status = CheckStatus::Fails;
            check.first_counterexample = check.counterexamples.front();
        }
        checks_.push_back(std::move(check));
    }

    void add_int(std::string id, std::string description, IndexRange range, CheckStatus expected,
                 const std::function<std::pair<std::int64_t, std::int64_t>(std::uint64_t)>& sides) {
        add(std::move(id), std::move(description), range, expected, [&](std::uint64_t n) {
            auto [l, r] = sides(n);
            return Sides{std::to_string(l), std::to_string(r)};
        });
    }

    void exact_checks() {
        const IndexRange r{1, std::min(n_max_, kExactAuditCap), IndexRange::Step::All};
        add("decomposition", "PP_n = TSPP_n * middle * third (exact)", r, CheckStatus::Holds, [](std::uint64_t n) {
            const auto report = decomposition_check(n);
            return Sides{to_string(report.pp), to_string(report.rhs)};
        });
        add("middle_boundary", "middle triple product = prod_{i<j} (i+j+n-1)/(i+j-1) (exact)", r,
            CheckStatus::Holds, [](std::uint64_t n) {
                return Sides{to_string(middle_term_direct(n)), to_string(middle_term_boundary(n))};
            });
        add("middle_telescoping", "middle triple product = SPP_n * prod (2i-1)/(2i+n-1) (exact)", r,
            CheckStatus::Holds, [](std::uint64_t n) {
                return Sides{to_string(middle_term_direct(n)), to_string(middle_term_telescoped(n))};
            });
        add("third_telescoping", "third triple product = prod_j (2j..3j-2)/(j..2j-2) (exact)", r,
            CheckStatus::Holds, [](std::uint64_t n) {
                return Sides{to_string(third_term_direct(n)), to_string(third_term(n))};
            });
    }

    void valuation_checks() {
        const IndexRange r{1, n_max_, IndexRange::Step::All};
        add_int("v2_odd_boundary", "v2 prod(2i+n-1) = 0 (n even), 2n - s2(3n-1) + s2(n-1) (n odd)", r,
                CheckStatus::Holds,
                [](std::uint64_t n) { return std::pair{direct::v2_odd_boundary(n), ppval::v2_odd_boundary(n)}; });
        add_int("v2_third", "v2 third = n + sum s2(j-1) - s2(3j-2)", r, CheckStatus::Holds,
                [](std::uint64_t n) { return std::pair{direct::v2_third(n), ppval::v2_third(n)}; });
        add_int("v2_spp", "v2(SPP_n) = n + sum s2(2n-j) - s2(3n+1-2j)", r, CheckStatus::Holds,
                [](std::uint64_t n) { return std::pair{direct::v2_spp(n), ppval::v2_spp(n)}; });
        add_int("v2_tsscpp", "v2(TSSCPP_2n) = sum s2(j+n-1) - s2(3j-2)", r, CheckStatus::Holds,
                [this](std::uint64_t n) { return std::pair{table_.tsscpp[n], ppval::v2_tsscpp(n)}; });
        add_int("v2_pp", "v2(PP_n) = sum 2 s2(i+n-1) - s2(i+2n-1) - s2(i-1)", r, CheckStatus::Holds,
                [this](std::uint64_t n) { return std::pair{table_.pp[n], ppval::v2_pp(n)}; });
        add_int("v2_tspp", "v2(TSPP_n) = v2(PP_n) - v2(middle) - v2(third)", r, CheckStatus::Holds,
                [this](std::uint64_t n) { return std::pair{table_.tspp[n], ppval::v2_tspp(n)}; });
        add_int("theorem_sign", "sign of v2(PP_n) - v2(TSPP_n): +1 for even n, -1 for odd n",
                {2, n_max_, IndexRange::Step::All}, CheckStatus::Holds, [this](std::uint64_t n) {
                    const std::int64_t d = table_.diff(n);
                    return std::pair<std::int64_t, std::int64_t>{(d > 0) - (d < 0), n % 2 == 0 ? 1 : -1};
                });
        add_int("se_plus_excess", "S_E(k) + D(k) = 2k", {1, n_max_, IndexRange::Step::All}, CheckStatus::Holds,
                [](std::uint64_t k) { return std::pair{s_e(k) + digit_excess(k), 2 * i64(k)}; });
    }

    void even_chain() {
        const IndexRange r{2, n_max_, IndexRange::Step::Even};
        add_int("even_combined", "n even: v2(PP_n) - v2(TSPP_n) = 2n + sum[...]", r, CheckStatus::Holds,
                [this](std::uint64_t n) { return std::pair{table_.diff(n), 2 * i64(n) + combined_sum(n)}; });
        add_int("eq1_subtract_tsscpp", "Eq.(1) minus v2(TSSCPP_2n) = 2n + sum s2(j-1) - s2(3n+1-2j)", r,
                CheckStatus::Holds, [this](std::uint64_t n) {
                    return std::pair{2 * i64(n) + combined_sum(n) - table_.tsscpp[n], 2 * i64(n) + subtracted_sum(n)};
                });
        add_int("eq1_halve", "= n + sum s2(j-1) - s2(3n/2-j)", r, CheckStatus::Holds, [](std::uint64_t n) {
            std::int64_t rhs = i64(n);
            for (std::uint64_t j = 1; j <= n; ++j) rhs += s(j - 1) - s(3 * n / 2 - j);
            return std::pair{2 * i64(n) + subtracted_sum(n), rhs};
        });
        add_int("eq1_reindex", "= n + sum s2(j-1) - s2(j-1+n/2)", r, CheckStatus::Holds, [](std::uint64_t n) {
            std::int64_t lhs = i64(n);
            std::int64_t rhs = i64(n);
            for (std::uint64_t j = 1; j <= n; ++j) {
                lhs += s(j - 1) - s(3 * n / 2 - j);
                rhs += s(j - 1) - s(j - 1 + n / 2);
            }
            return std::pair{lhs, rhs};
        });
        add_int("eq1_shift", "= n + sum_{j=0}^{n-1} s2(j) - s2(j+n/2)", r, CheckStatus::Holds, [](std::uint64_t n) {
            std::int64_t lhs = i64(n);
            for (std::uint64_t j = 1; j <= n; ++j) lhs += s(j - 1) - s(j - 1 + n / 2);
            return std::pair{lhs, i64(n) + shifted_sum(0, i64(n) - 1, n / 2)};
        });
        add_int("eq1_k_form", "= 2k + sum_{j=0}^{2k-1} s2(j) - s2(j+k), k = n/2", r, CheckStatus::Holds,
                [](std::uint64_t n) {
                    const std::uint64_t k = n / 2;
                    return std::pair{i64(n) + shifted_sum(0, i64(n) - 1, n / 2),
                                     2 * i64(k) + shifted_sum(0, 2 * i64(k) - 1, k)};
                });
        add_int("eq1_split", "= 2k + sum_{j<k} s2(j) - sum_{j<k} s2(j+2k) = S_E(k)", r, CheckStatus::Holds,
                [](std::uint64_t n) {
                    const std::uint64_t k = n / 2;
                    return std::pair{2 * i64(k) + shifted_sum(0, 2 * i64(k) - 1, k), s_e(k)};
                });
        add_int("even_reduction", "n even: v2(PP_n) - v2(TSPP_n) = v2(TSSCPP_2n) + S_E(n/2)", r, CheckStatus::Holds,
                [this](std::uint64_t n) { return std::pair{table_.diff(n), table_.tsscpp[n] + s_e(n / 2)}; });
    }

    void odd_chain() {
        add_int("odd_combined", "n odd: v2(PP_n) - v2(TSPP_n) = s2(3n-1) - s2(n-1) + sum[...]",
                {1, n_max_, IndexRange::Step::Odd}, CheckStatus::Holds, [this](std::uint64_t n) {
                    return std::pair{table_.diff(n), s(3 * n - 1) - s(n - 1) + combined_sum(n)};
                });

        const IndexRange r{3, n_max_, IndexRange::Step::Odd};
        add_int("case2_subtract_tsscpp", "sum[...] - v2(TSSCPP_2n) = sum s2(j-1) - s2(3n+1-2j)", r,
                CheckStatus::Holds,
                [this](std::uint64_t n) { return std::pair{combined_sum(n) - table_.tsscpp[n], subtracted_sum(n)}; });
        add_int("case2_halve", "= sum_{j=0}^{n-1} s2(j) - s2((n+1)/2+j)", r, CheckStatus::Holds, [](std::uint64_t n) {
            return std::pair{subtracted_sum(n), shifted_sum(0, i64(n) - 1, (n + 1) / 2)};
        });
        add_int("case2_fold", "= sum_{j=0}^{(n-1)/2} s2(j) - s2(n+j)", r, CheckStatus::Holds, [](std::uint64_t n) {
            return std::pair{shifted_sum(0, i64(n) - 1, (n + 1) / 2), shifted_sum(0, i64(n - 1) / 2, n)};
        });
        add_int("case2_reindex_2k1", "= sum_{j=0}^{k-1} s2(j) - s2(j+2k+1), k = (n-1)/2 (upper limit drops j = k)",
                r, CheckStatus::Fails, [](std::uint64_t n) {
                    const std::uint64_t k = (n - 1) / 2;
                    return std::pair{shifted_sum(0, i64(n - 1) / 2, n), shifted_sum(0, i64(k) - 1, 2 * k + 1)};
                });
        add_int("case2_shift_correction", "= s2(n) - s2(3(n-1)/2+1) + sum_{j=0}^{k-1} s2(j) - s2(j+2k)", r,
                CheckStatus::Fails, [](std::uint64_t n) {
                    const std::uint64_t k = (n - 1) / 2;
                    return std::pair{shifted_sum(0, i64(k) - 1, 2 * k + 1),
                                     s(n) - s(3 * (n - 1) / 2 + 1) + shifted_sum(0, i64(k) - 1, 2 * k)};
                });
        add_int("case2_parity_rewrite", "s2(n) - s2(3(n-1)/2+1) = 1 + s2(n-1) - s2(3n-1)", r, CheckStatus::Holds,
                [](std::uint64_t n) {
                    return std::pair{s(n) - s(3 * (n - 1) / 2 + 1), 1 + s(n - 1) - s(3 * n - 1)};
                });
        add_int("case2_final_display",
                "s2(3n-1) - s2(n-1) + sum[...] = v2(TSSCPP_2n) + 1 + sum_{j<k} s2(j) - s2(j+2k) "
                "(printed as TSCPP; TSSCPP intended)",
                r, CheckStatus::Fails, [this](std::uint64_t n) {
                    const std::uint64_t k = (n - 1) / 2;
                    return std::pair{s(3 * n - 1) - s(n - 1) + combined_sum(n),
                                     table_.tsscpp[n] + 1 + shifted_sum(0, i64(k) - 1, 2 * k)};
                });
    }

    std::uint64_t n_max_;
    DirectTable table_;
    std::vector<IdentityCheck> checks_;
};

}  // namespace

std::vector<IdentityCheck> audit(std::uint64_t n_max) {
    if (n_max < 3) throw DomainError("audit requires n_max >= 3");
    return Auditor(n_max).run();
}

std::string audit_line(const IdentityCheck& check) {
    std::string line = check.id + '\t' + check.range.to_string() + '\t' + std::string(status_name(check.status)) + '\t';
    if (check.first_counterexample) {
        const auto& c = *check.first_counterexample;
        line += "n=" + std::to_string(c.n) + " lhs=" + c.lhs + " rhs=" + c.rhs;
    }
    return line;
}

std::string audit_json(const std::vector<IdentityCheck>& checks) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& check : checks) {
        nlohmann::json counterexamples = nlohmann::json::array();
        for (const auto& c : check.counterexamples) counterexamples.push_back({{"n", c.n}, {"lhs", c.lhs}, {"rhs", c.rhs}});
        out.push_back({
            {"id", check.id},
            {"description", check.description},
            {"range", check.range.to_string()},
            {"status", status_name(check.status)},
            {"expected", status_name(check.expected)},
            {"failures", check.failures},
            {"counterexample", check.first_counterexample
                                   ? nlohmann::json{{"n", check.first_counterexample->n},
                                                    {"lhs", check.first_counterexample->lhs},
                                                    {"rhs", check.first_counterexample->rhs}}
                                   : nlohmann::json(nullptr)},
            {"counterexamples", counterexamples},
        });
    }
    return out.dump(2);
}

std::vector<SeriesRecord> series(std::uint64_t cube_max) {
    if (cube_max < 2) throw DomainError("series requires cube_max >= 2");
    std::vector<SeriesRecord> out;
    out.reserve(cube_max);
    for (std::uint64_t cube = 1; cube <= cube_max; ++cube) {
        SeriesRecord rec;
        rec.cube = cube;
        rec.v2_pp = ppval::v2_pp(cube);
        rec.v2_spp = ppval::v2_spp(cube);
        rec.v2_tspp = rec.v2_pp - (rec.v2_spp - ppval::v2_odd_boundary(cube)) - ppval::v2_third(cube);
        rec.diff = rec.v2_pp - rec.v2_tspp;
        if (cube % 2 == 0) {
            rec.v2_tsscpp = ppval::v2_tsscpp(cube / 2);
            if (rec.diff > 0) rec.ratio_even = make_ratio(BigInt(5 * *rec.v2_tsscpp), BigInt(rec.diff));
        } else {
            rec.odd_margin = rec.diff + 3 * static_cast<std::int64_t>((cube + 1) / 2);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

void write_series_csv(std::ostream& out, const std::vector<SeriesRecord>& records) {
    out << kSeriesHeader << '\n';
    for (const auto& r : records) {
        out << r.cube << ',' << r.v2_pp << ',' << r.v2_spp << ',' << r.v2_tspp << ',';
        if (r.v2_tsscpp) out << *r.v2_tsscpp;
        out << ',' << r.diff << ',';
        if (r.ratio_even) out << to_string(*r.ratio_even);
        out << ',';
        if (r.odd_margin) out << *r.odd_margin;
        out << '\n';
    }
}

RatioStats even_ratio_stats(std::uint64_t cube_max) {
    if (cube_max < 2) throw DomainError("even_ratio_stats requires cube_max >= 2");
    RatioStats stats;
    bool first = true;
    for (const auto& rec : series(cube_max)) {
        if (!rec.ratio_even) continue;
        if (first || *rec.ratio_even > stats.max) {
            stats.max = *rec.ratio_even;
            stats.argmax.clear();
            first = false;
        }
        if (*rec.ratio_even == stats.max) stats.argmax.push_back(rec.cube);
    }
    return stats;
}

MinimaReport odd_minima(std::uint64_t cube_max) {
    if (cube_max < 3) throw DomainError("odd_minima requires cube_max >= 3");
    MinimaReport report;
    for (std::uint64_t cube = 3; cube <= cube_max; cube += 2) {
        const std::int64_t n = static_cast<std::int64_t>((cube + 1) / 2);
        const std::int64_t d = theorem_diff(cube);
        ++report.checked;
        if (d < -3 * n) report.violations.push_back({cube, d, -3 * n});
        if (d == -3 * n) report.on_line.push_back(cube);
    }
    return report;
}

TsscppProfile tsscpp_max_profile(unsigned m) {
    if (m < 2 || m > 14) throw DomainError("tsscpp_max_profile requires 2 <= m <= 14");
    TsscppProfile p;
    p.m = m;
    const std::uint64_t pow = std::uint64_t{1} << m;
    p.first = (2 * pow + 2) / 3;
    p.last = 4 * pow / 3;
    p.target = static_cast<std::int64_t>((pow + 1) / 3);
    bool first = true;
    for (std::uint64_t n = p.first; n <= p.last; ++n) {
        const std::int64_t v = v2_tsscpp(n);
        if (first || v > p.max) {
            p.max = v;
            p.argmax.clear();
            first = false;
        }
        if (v == p.max) p.argmax.push_back(n);
    }
    return p;
}

}  // namespace ppval
