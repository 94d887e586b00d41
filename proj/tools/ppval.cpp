// ppval: exact counts and 2-adic valuations of plane-partition families,
// identity audits, lemma sweeps and conjecture series.
//
// Exit status: 0 success, 1 a verified property failed, 2 usage or input
// error, 3 a conjecture report found violations.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppval/audit.hpp"
#include "ppval/closed_forms.hpp"
#include "ppval/digit_core.hpp"
#include "ppval/errors.hpp"
#include "ppval/exact_oracle.hpp"
#include "ppval/formula_dsl.hpp"
#include "ppval/lemma_engine.hpp"

namespace {

using namespace ppval;

enum Exit : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kConjectureViolated = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_index(const std::string& text, const char* what) {
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size())
        throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
    return value;
}

Family parse_family_or_throw(const std::string& name) {
    auto f = parse_family(name);
    if (!f) throw UsageError("unknown family '" + name + "' (expected pp, spp, tspp or tsscpp)");
    return *f;
}

void require(bool condition, const std::string& message) {
    if (!condition) throw UsageError(message);
}

std::string range_text(std::uint64_t lo, std::uint64_t hi) {
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

// One line per sub-check: name, range, status, first failure.
struct SuiteReport {
    bool ok = true;

    void line(const std::string& name, const std::string& range, bool holds, const std::string& detail = "") {
        std::cout << name << '\t' << range << '\t' << (holds ? "Holds" : "Fails") << '\t' << detail << '\n';
        ok = ok && holds;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --- count / v2 -------------------------------------------------------------

int run_count(const std::vector<std::string>& args, const std::string& formula, const std::string& formula_file) {
    if (!formula.empty() || !formula_file.empty()) {
        require(formula.empty() || formula_file.empty(), "--formula and --formula-file are exclusive");
        require(args.size() == 1, "count --formula TEXT <n>: expected exactly one size argument");
        const FormulaSpec spec = parse_formula(formula.empty() ? read_file(formula_file) : formula);
        const ProductValue value = evaluate(spec, parse_index(args[0], "size"));
        std::cout << std::visit([](const auto& v) { return to_string(v); }, value) << '\n';
        return kOk;
    }
    require(args.size() == 2, "count <family> <cube>: expected two arguments");
    std::cout << to_string(count_family(parse_family_or_throw(args[0]), parse_index(args[1], "cube"))) << '\n';
    return kOk;
}

std::int64_t closed_form_v2(Family family, std::uint64_t cube) {
    switch (family) {
        case Family::PP: return v2_pp(cube);
        case Family::SPP: return v2_spp(cube);
        case Family::TSPP: return v2_tspp(cube);
        case Family::TSSCPP:
            if (cube % 2 != 0) throw OddCubeForTSSCPP(cube);
            return v2_tsscpp(cube / 2);
    }
    return 0;
}

int run_v2(const std::string& family_text, const std::string& cube_text, bool oracle) {
    const Family family = parse_family_or_throw(family_text);
    const std::uint64_t cube = parse_index(cube_text, "cube");
    const std::int64_t value = closed_form_v2(family, cube);
    if (oracle) {
        require(cube <= kOracleCap, "--oracle is limited to cube <= " + std::to_string(kOracleCap));
        const auto exact = static_cast<std::int64_t>(v2(count_family(family, cube)));
        if (exact != value) {
            std::cerr << "mismatch: closed form " << value << ", oracle " << exact << '\n';
            return kVerificationFailed;
        }
    }
    std::cout << value << '\n';
    return kOk;
}

// --- verify -------------------------------------------------------------------

int run_verify_theorem(std::uint64_t n_max) {
    require(n_max >= 2, "verify theorem: --max must be >= 2");
    SuiteReport report;
    std::string even_fail;
    std::string odd_fail;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        const std::int64_t d = theorem_diff(n);
        if (n % 2 == 0 && d <= 0 && even_fail.empty()) even_fail = "n=" + std::to_string(n) + " diff=" + std::to_string(d);
        if (n % 2 == 1 && d >= 0 && odd_fail.empty()) odd_fail = "n=" + std::to_string(n) + " diff=" + std::to_string(d);
    }
    report.line("even_positive", range_text(2, n_max) + " even", even_fail.empty(), even_fail);
    if (n_max >= 3) report.line("odd_negative", range_text(3, n_max) + " odd", odd_fail.empty(), odd_fail);
    return report.ok ? kOk : kVerificationFailed;
}

int run_verify_lemma(std::uint64_t k_max) {
    require(k_max >= 1, "verify lemma: --max must be >= 1");
    SuiteReport report;
    std::string bound_fail;
    for (std::uint64_t k = 1; k <= k_max && bound_fail.empty(); ++k) {
        const std::int64_t d = digit_excess(k);
        const auto ki = static_cast<std::int64_t>(k);
        if (d < ki || d >= 2 * ki) bound_fail = "k=" + std::to_string(k) + " D=" + std::to_string(d);
    }
    report.line("k_le_D_lt_2k", range_text(1, k_max), bound_fail.empty(), bound_fail);
    std::string pow_fail;
    for (std::uint64_t p = 1; p <= k_max && pow_fail.empty(); p *= 2)
        if (digit_excess(p) != static_cast<std::int64_t>(p))
            pow_fail = "k=" + std::to_string(p) + " D=" + std::to_string(digit_excess(p));
    report.line("power_of_two_exact", range_text(1, k_max), pow_fail.empty(), pow_fail);
    return report.ok ? kOk : kVerificationFailed;
}

int run_verify_frames(std::uint64_t k_max, std::uint64_t proximity_max) {
    require(k_max >= 1, "verify frames: --max must be >= 1");
    SuiteReport report;
    std::string decomposition_fail;
    std::string beyond_fail;
    std::string single_fail;
    std::string top_fail;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        const unsigned top = DigitFrame(k).top_bit();
        const std::uint64_t beyond = beyond_top_contribution(k);
        std::int64_t total = static_cast<std::int64_t>(beyond);
        for (unsigned b = 0; b <= top; ++b) total += add_direct(k, b);
        if (total != digit_excess(k) && decomposition_fail.empty())
            decomposition_fail = "k=" + std::to_string(k) + " columns=" + std::to_string(total) +
                                 " D=" + std::to_string(digit_excess(k));
        if (beyond != k && beyond_fail.empty()) beyond_fail = "k=" + std::to_string(k) + " beyond=" + std::to_string(beyond);
        if (!single_bit_above_top(k) && single_fail.empty()) single_fail = "k=" + std::to_string(k);
        const ExactRatio top_profile = add_piecewise_top(k);
        if (ExactRatio(add_direct(k, top)) != top_profile && top_fail.empty())
            top_fail = "k=" + std::to_string(k) + " b=" + std::to_string(top) + " direct=" +
                       std::to_string(add_direct(k, top)) + " piecewise=" + to_string(top_profile);
    }
    report.line("column_decomposition", range_text(1, k_max), decomposition_fail.empty(), decomposition_fail);
    report.line("beyond_top", range_text(1, k_max), beyond_fail.empty(), beyond_fail);
    report.line("single_bit_above_top", range_text(1, k_max), single_fail.empty(), single_fail);
    report.line("top_column_exact", range_text(1, k_max), top_fail.empty(), top_fail);

    const std::uint64_t prox_max = std::min(k_max, proximity_max);
    std::uint64_t violations = 0;
    std::string prox_fail;
    for (std::uint64_t k = 1; k <= prox_max; ++k) {
        const unsigned top = DigitFrame(k).top_bit();
        for (unsigned b = 0; b < top; ++b) {
            const ExactRatio printed = add_piecewise_low(k, b);
            const ExactRatio gap = ExactRatio(add_direct(k, b)) - printed;
            if (abs(gap) <= 1) continue;
            if (violations++ == 0)
                prox_fail = "k=" + std::to_string(k) + " b=" + std::to_string(b) + " direct=" +
                            std::to_string(add_direct(k, b)) + " printed=" + to_string(printed);
        }
    }
    if (violations > 0) prox_fail += " violations=" + std::to_string(violations);
    report.line("low_column_proximity", range_text(1, prox_max), violations == 0, prox_fail);
    return report.ok ? kOk : kVerificationFailed;
}

// --- audit / series / stats / frame ---------------------------------------------

int run_audit(std::uint64_t n_max, const std::string& report_path, const std::string& json_path) {
    require(n_max >= 3, "audit: --max must be >= 3");
    const auto checks = audit(n_max);
    std::ostringstream tsv;
    bool ok = true;
    for (const auto& c : checks) {
        tsv << audit_line(c) << '\n';
        ok = ok && c.as_expected();
    }
    std::cout << tsv.str();
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw UsageError("cannot write '" + report_path + "'");
        out << tsv.str();
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw UsageError("cannot write '" + json_path + "'");
        out << audit_json(checks) << '\n';
    }
    return ok ? kOk : kVerificationFailed;
}

int run_series(std::uint64_t cube_max, const std::string& out_path) {
    require(cube_max >= 2, "series: --max must be >= 2");
    const auto records = series(cube_max);
    if (out_path.empty() || out_path == "-") {
        write_series_csv(std::cout, records);
    } else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write '" + out_path + "'");
        write_series_csv(out, records);
    }
    return kOk;
}

std::string join(const std::vector<std::uint64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i]);
    return out;
}

int run_stats_ratio(std::uint64_t cube_max) {
    require(cube_max >= 2, "stats ratio: --max must be >= 2");
    const RatioStats stats = even_ratio_stats(cube_max);
    const bool conjecture = cube_max < 4 || stats.max == ExactRatio(5, 3);
    std::cout << "max\t" << to_string(stats.max) << '\n'
              << "argmax\t" << join(stats.argmax) << '\n'
              << "count\t" << stats.argmax.size() << '\n'
              << "max_is_5/3\t" << (conjecture ? "yes" : "no") << '\n';
    return conjecture ? kOk : kConjectureViolated;
}

int run_stats_minima(std::uint64_t cube_max) {
    require(cube_max >= 3, "stats minima: --max must be >= 3");
    const MinimaReport r = odd_minima(cube_max);
    std::cout << "checked\t" << r.checked << '\n' << "violations\t" << r.violations.size() << '\n';
    for (const auto& v : r.violations)
        std::cout << "violation\tcube=" << v.cube << " diff=" << v.diff << " bound=" << v.bound << '\n';
    std::cout << "on_line\t" << join(r.on_line) << '\n';
    return r.violations.empty() ? kOk : kConjectureViolated;
}

int run_stats_profile(const std::vector<unsigned>& ms) {
    bool all = true;
    for (unsigned m : ms) {
        require(m >= 2 && m <= 14, "stats tsscpp-profile: --m must be in [2,14]");
        const TsscppProfile p = tsscpp_max_profile(m);
        std::cout << "m=" << m << '\t' << range_text(p.first, p.last) << "\tmax=" << p.max << "\ttarget=" << p.target
                  << '\t' << (p.matches() ? "match" : "differs") << '\n';
        all = all && p.matches();
    }
    return all ? kOk : kConjectureViolated;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact plane-partition counts and 2-adic valuation checks"};
    app.require_subcommand(1);
    int status = kOk;

    auto* count = app.add_subcommand("count", "exact count: count <family> <cube>, or count --formula TEXT <n>");
    std::vector<std::string> count_args;
    std::string formula;
    std::string formula_file;
    count->add_option("args", count_args, "family and cube size, or just n with --formula")->required();
    count->add_option("--formula", formula, "inline product formula");
    count->add_option("--formula-file", formula_file, "file holding a product formula");

    auto* v2cmd = app.add_subcommand("v2", "closed-form 2-adic valuation of a family count");
    std::string v2_family;
    std::string v2_cube;
    bool v2_oracle = false;
    v2cmd->add_option("family", v2_family)->required();
    v2cmd->add_option("cube", v2_cube)->required();
    v2cmd->add_flag("--oracle", v2_oracle, "cross-check against the exact count (cube <= 60)");

    auto* verify = app.add_subcommand("verify", "hard-invariant sweeps");
    verify->require_subcommand(1);
    std::uint64_t theorem_max = 2000;
    std::uint64_t lemma_max = 1'000'000;
    std::uint64_t frames_max = std::uint64_t{1} << 16;
    std::uint64_t proximity_max = std::uint64_t{1} << 12;
    auto* theorem = verify->add_subcommand("theorem", "sign of v2(PP_n) - v2(TSPP_n)");
    theorem->add_option("--max", theorem_max)->capture_default_str();
    auto* lemma = verify->add_subcommand("lemma", "k <= D(k) < 2k and D(2^i) = 2^i");
    lemma->add_option("--max", lemma_max)->capture_default_str();
    auto* frames = verify->add_subcommand("frames", "column-by-column accounting of D(k)");
    frames->add_option("--max", frames_max)->capture_default_str();
    frames->add_option("--proximity-max", proximity_max, "upper k for the low-column profile comparison")
        ->capture_default_str();

    auto* auditcmd = app.add_subcommand("audit", "step-by-step identity audit");
    std::uint64_t audit_max = 200;
    std::string report_path;
    std::string json_path;
    auditcmd->add_option("--max", audit_max)->capture_default_str();
    auditcmd->add_option("--report", report_path, "write the tab-separated report here");
    auditcmd->add_option("--json", json_path, "write the structured JSON report here");

    auto* seriescmd = app.add_subcommand("series", "CSV of valuations per cube size");
    std::uint64_t series_max = 4096;
    std::string series_out;
    seriescmd->add_option("--max", series_max)->capture_default_str();
    seriescmd->add_option("--out", series_out, "output file (default stdout)");

    auto* stats = app.add_subcommand("stats", "conjecture reports");
    stats->require_subcommand(1);
    std::uint64_t ratio_max = 1024;
    std::uint64_t minima_max = 4095;
    std::vector<unsigned> profile_ms = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    auto* ratio = stats->add_subcommand("ratio", "max of 5 v2(TSSCPP)/diff over even cubes");
    ratio->add_option("--max", ratio_max)->capture_default_str();
    auto* minima = stats->add_subcommand("minima", "odd cubes against the -3n line");
    minima->add_option("--max", minima_max)->capture_default_str();
    auto* profile = stats->add_subcommand("tsscpp-profile", "max v2(TSSCPP) on dyadic intervals");
    profile->add_option("--m", profile_ms, "one or more exponents in [2,14]");

    auto* framecmd = app.add_subcommand("frame", "binary table of the two windows for k");
    std::uint64_t frame_k = 11;
    framecmd->add_option("--k", frame_k)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*count) status = run_count(count_args, formula, formula_file);
        else if (*v2cmd) status = run_v2(v2_family, v2_cube, v2_oracle);
        else if (*theorem) status = run_verify_theorem(theorem_max);
        else if (*lemma) status = run_verify_lemma(lemma_max);
        else if (*frames) status = run_verify_frames(frames_max, proximity_max);
        else if (*auditcmd) status = run_audit(audit_max, report_path, json_path);
        else if (*seriescmd) status = run_series(series_max, series_out);
        else if (*ratio) status = run_stats_ratio(ratio_max);
        else if (*minima) status = run_stats_minima(minima_max);
        else if (*profile) status = run_stats_profile(profile_ms);
        else if (*framecmd) std::cout << render_frame(frame_k);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const SyntaxError& e) {
        std::cerr << "formula error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnboundedRegion& e) {
        std::cerr << "formula error: " << e.what() << '\n';
        return kUsage;
    } catch (const NonpositiveFactor& e) {
        std::cerr << "formula error: " << e.what() << '\n';
        return kUsage;
    } catch (const OddCubeForTSSCPP& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const RenderCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return status;
}
