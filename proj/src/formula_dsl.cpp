#include "ppval/formula_dsl.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

#include "ppval/errors.hpp"

namespace ppval {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
    return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": expected " +
                         join(expected) + ", found " + found),
      position_(position),
      expected_(std::move(expected)) {}

std::int64_t LinearForm::evaluate(const std::array<std::int64_t, 3>& point, std::int64_t n) const noexcept {
    return index[0] * point[0] + index[1] * point[1] + index[2] * point[2] + size * n + constant;
}

namespace {

char var_name(IndexVar v) { return "ijk"[static_cast<std::size_t>(v)]; }

// ---------------------------------------------------------------------------
// Parsing

enum class Tok { Ident, Int, Comma, Colon, LParen, RParen, Slash, Plus, Minus, Star, Le, Lt, Eq, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
    std::int64_t value = 0;
};

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Tok::Ident, start, std::string(text.substr(start, i - start))});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
                    throw SyntaxError(start, {"integer below 2^63"}, "overlong literal");
                value = value * 10 + (text[i] - '0');
                ++i;
            }
            out.push_back({Tok::Int, start, std::string(text.substr(start, i - start)), value});
            continue;
        }
        Tok kind;
        std::size_t len = 1;
        switch (c) {
            case ',': kind = Tok::Comma; break;
            case ':': kind = Tok::Colon; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '/': kind = Tok::Slash; break;
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '=': kind = Tok::Eq; break;
            case '<':
                if (i + 1 < text.size() && text[i + 1] == '=') {
                    kind = Tok::Le;
                    len = 2;
                } else {
                    kind = Tok::Lt;
                }
                break;
            default:
                throw SyntaxError(start, {"identifier", "integer", "operator"},
                                  "'" + std::string(1, c) + "'");
        }
        out.push_back({kind, start, std::string(text.substr(start, len))});
        i += len;
    }
    out.push_back({Tok::End, text.size(), ""});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    FormulaSpec parse() {
        FormulaSpec spec;
        const Token& head = peek();
        if (head.kind != Tok::Ident || head.text != "prod") fail({"'prod'"});
        advance();
        parse_variables(spec);
        expect(Tok::Colon, "':'");
        spec.constraints.push_back(parse_chain());
        while (accept(Tok::Comma)) spec.constraints.push_back(parse_chain());
        expect(Tok::Colon, "':'");
        expect(Tok::LParen, "'('");
        spec.numerator = parse_linear();
        expect(Tok::RParen, "')'");
        expect(Tok::Slash, "'/'");
        expect(Tok::LParen, "'('");
        spec.denominator = parse_linear();
        expect(Tok::RParen, "')'");
        if (peek().kind != Tok::End) fail({"end of input"});
        return spec;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    void expect(Tok kind, const char* what) {
        if (!accept(kind)) fail({what});
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw SyntaxError(peek().pos, std::move(expected), describe(peek()));
    }

    static std::optional<IndexVar> index_var(std::string_view name) {
        if (name == "i") return IndexVar::I;
        if (name == "j") return IndexVar::J;
        if (name == "k") return IndexVar::K;
        return std::nullopt;
    }

    void parse_variables(FormulaSpec& spec) {
        do {
            const Token& t = peek();
            auto v = t.kind == Tok::Ident ? index_var(t.text) : std::nullopt;
            if (!v) fail({"index variable i, j or k"});
            if (std::find(spec.variables.begin(), spec.variables.end(), *v) != spec.variables.end())
                throw SyntaxError(t.pos, {"distinct index variable"}, describe(t));
            spec.variables.push_back(*v);
            advance();
        } while (accept(Tok::Comma));
        declared_ = spec.variables;
    }

    ConstraintChain parse_chain() {
        ConstraintChain chain;
        chain.terms.push_back(parse_linear());
        for (;;) {
            Comparison op;
            if (accept(Tok::Le)) {
                op = Comparison::LessEqual;
            } else if (accept(Tok::Lt)) {
                op = Comparison::Less;
            } else if (accept(Tok::Eq)) {
                op = Comparison::Equal;
            } else {
                if (chain.ops.empty()) fail({"'<='", "'<'", "'='"});
                break;
            }
            chain.ops.push_back(op);
            chain.terms.push_back(parse_linear());
        }
        return chain;
    }

    LinearForm parse_linear() {
        LinearForm form;
        bool negative = false;
        if (accept(Tok::Minus)) {
            negative = true;
        } else {
            accept(Tok::Plus);
        }
        parse_term(form, negative);
        for (;;) {
            if (accept(Tok::Plus)) {
                parse_term(form, false);
            } else if (accept(Tok::Minus)) {
                parse_term(form, true);
            } else {
                break;
            }
        }
        return form;
    }

    void parse_term(LinearForm& form, bool negative) {
        std::int64_t coefficient = 1;
        bool have_number = false;
        if (peek().kind == Tok::Int) {
            coefficient = advance().value;
            have_number = true;
            const bool star = accept(Tok::Star);
            if (!star && peek().kind != Tok::Ident) {
                form.constant += negative ? -coefficient : coefficient;
                return;
            }
        }
        const Token& t = peek();
        if (t.kind != Tok::Ident) {
            if (have_number) fail({"variable name"});
            fail({"integer", "variable name"});
        }
        const std::int64_t signed_coefficient = negative ? -coefficient : coefficient;
        if (t.text == "n") {
            form.size += signed_coefficient;
        } else if (auto v = index_var(t.text);
                   v && std::find(declared_.begin(), declared_.end(), *v) != declared_.end()) {
            form.index[static_cast<std::size_t>(*v)] += signed_coefficient;
        } else {
            std::vector<std::string> names;
            for (IndexVar d : declared_) names.push_back(std::string(1, var_name(d)));
            names.push_back("n");
            fail(names);
        }
        advance();
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<IndexVar> declared_;
};

// ---------------------------------------------------------------------------
// Region solving

// sum_l coef[l] * x_l + size * n + constant <= 0, with coefficients indexed by
// enumeration level rather than by variable name.
struct Inequality {
    std::array<std::int64_t, 3> coef{};
    std::int64_t size = 0;
    std::int64_t constant = 0;

    bool operator==(const Inequality&) const = default;
};

Inequality normalized(Inequality q) {
    std::int64_t g = std::gcd(std::gcd(std::gcd(q.coef[0], q.coef[1]), std::gcd(q.coef[2], q.size)), q.constant);
    if (g > 1) {
        for (auto& c : q.coef) c /= g;
        q.size /= g;
        q.constant /= g;
    }
    return q;
}

struct Region {
    std::size_t depth = 0;
    std::array<std::vector<Inequality>, 3> bounds;  // per level: coef[level] != 0
    std::vector<Inequality> global;                 // no index variable at all
};

Region solve_region(const FormulaSpec& spec) {
    Region region;
    region.depth = spec.variables.size();

    auto to_level = [&](const LinearForm& lhs, const LinearForm& rhs, std::int64_t slack) {
        Inequality q;
        for (std::size_t l = 0; l < spec.variables.size(); ++l) {
            const IndexVar v = spec.variables[l];
            q.coef[l] = lhs.coefficient(v) - rhs.coefficient(v);
        }
        q.size = lhs.size - rhs.size;
        q.constant = lhs.constant - rhs.constant + slack;
        return normalized(q);
    };

    std::vector<Inequality> system;
    for (const auto& chain : spec.constraints) {
        for (std::size_t t = 0; t < chain.ops.size(); ++t) {
            const LinearForm& a = chain.terms[t];
            const LinearForm& b = chain.terms[t + 1];
            switch (chain.ops[t]) {
                case Comparison::LessEqual: system.push_back(to_level(a, b, 0)); break;
                case Comparison::Less: system.push_back(to_level(a, b, 1)); break;
                case Comparison::Equal:
                    system.push_back(to_level(a, b, 0));
                    system.push_back(to_level(b, a, 0));
                    break;
            }
        }
    }

    // Fourier-Motzkin from the innermost level outwards. The projections are
    // rational shadows, so outer ranges may be loose; inner levels then come
    // out empty, which keeps the enumeration exact.
    for (std::size_t level = region.depth; level-- > 0;) {
        std::vector<Inequality> rest;
        std::vector<Inequality> upper;
        std::vector<Inequality> lower;
        for (const auto& q : system) {
            if (q.coef[level] > 0) {
                upper.push_back(q);
            } else if (q.coef[level] < 0) {
                lower.push_back(q);
            } else if (std::find(rest.begin(), rest.end(), q) == rest.end()) {
                rest.push_back(q);
            }
        }
        if (upper.empty() || lower.empty()) {
            throw UnboundedRegion(std::string("index variable ") + var_name(spec.variables[level]) +
                                  (upper.empty() ? " has no upper bound" : " has no lower bound"));
        }
        for (const auto& u : upper) {
            for (const auto& d : lower) {
                const std::int64_t a = u.coef[level];
                const std::int64_t b = -d.coef[level];
                Inequality c;
                for (std::size_t l = 0; l < 3; ++l) c.coef[l] = b * u.coef[l] + a * d.coef[l];
                c.size = b * u.size + a * d.size;
                c.constant = b * u.constant + a * d.constant;
                c = normalized(c);
                if (std::find(rest.begin(), rest.end(), c) == rest.end()) rest.push_back(c);
            }
        }
        region.bounds[level] = upper;
        region.bounds[level].insert(region.bounds[level].end(), lower.begin(), lower.end());
        system = std::move(rest);
    }
    region.global = std::move(system);
    return region;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Visits every lattice point of the region with the factor pair at that point.
template <typename Visit>
void for_each_point(const FormulaSpec& spec, const Region& region, std::int64_t n, Visit&& visit) {
    for (const auto& q : region.global)
        if (q.size * n + q.constant > 0) return;

    std::array<std::int64_t, 3> levels{};  // values by level
    std::array<std::int64_t, 3> point{};   // values by variable
    auto recurse = [&](auto&& self, std::size_t level) -> void {
        if (level == region.depth) {
            const std::int64_t num = spec.numerator.evaluate(point, n);
            const std::int64_t den = spec.denominator.evaluate(point, n);
            if (num <= 0 || den <= 0) {
                std::ostringstream os;
                os << "factor (" << num << ")/(" << den << ") is not positive at";
                for (std::size_t l = 0; l < region.depth; ++l)
                    os << ' ' << var_name(spec.variables[l]) << '=' << levels[l];
                os << " n=" << n;
                throw NonpositiveFactor(os.str());
            }
            visit(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
            return;
        }
        std::int64_t lo = std::numeric_limits<std::int64_t>::min();
        std::int64_t hi = std::numeric_limits<std::int64_t>::max();
        for (const auto& q : region.bounds[level]) {
            std::int64_t rest = q.size * n + q.constant;
            for (std::size_t l = 0; l < level; ++l) rest += q.coef[l] * levels[l];
            const std::int64_t c = q.coef[level];
            if (c > 0) {
                hi = std::min(hi, floor_div(-rest, c));
            } else {
                lo = std::max(lo, ceil_div(rest, -c));
            }
        }
        for (std::int64_t x = lo; x <= hi; ++x) {
            levels[level] = x;
            point[static_cast<std::size_t>(spec.variables[level])] = x;
            self(self, level + 1);
        }
    };
    recurse(recurse, 0);
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t valuation_at(std::uint64_t value, std::uint64_t p) {
    std::int64_t e = 0;
    while (value % p == 0) {
        value /= p;
        ++e;
    }
    return e;
}

void print_linear(std::ostringstream& os, const LinearForm& form) {
    bool first = true;
    auto emit = [&](std::int64_t c, const std::string& name) {
        if (c == 0) return;
        if (c < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        const std::int64_t mag = c < 0 ? -c : c;
        if (name.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << name;
        }
        first = false;
    };
    emit(form.index[0], "i");
    emit(form.index[1], "j");
    emit(form.index[2], "k");
    emit(form.size, "n");
    emit(form.constant, "");
    if (first) os << '0';
}

}  // namespace

FormulaSpec parse_formula(std::string_view text) {
    FormulaSpec spec = Parser(text).parse();
    solve_region(spec);
    return spec;
}

std::string print_formula(const FormulaSpec& spec) {
    std::ostringstream os;
    os << "prod ";
    for (std::size_t i = 0; i < spec.variables.size(); ++i) os << (i ? "," : "") << var_name(spec.variables[i]);
    os << " : ";
    for (std::size_t c = 0; c < spec.constraints.size(); ++c) {
        if (c) os << ", ";
        const auto& chain = spec.constraints[c];
        for (std::size_t t = 0; t < chain.terms.size(); ++t) {
            if (t) {
                switch (chain.ops[t - 1]) {
                    case Comparison::Less: os << '<'; break;
                    case Comparison::LessEqual: os << "<="; break;
                    case Comparison::Equal: os << '='; break;
                }
            }
            print_linear(os, chain.terms[t]);
        }
    }
    os << " : (";
    print_linear(os, spec.numerator);
    os << ")/(";
    print_linear(os, spec.denominator);
    os << ')';
    return os.str();
}

ProductValue evaluate(const FormulaSpec& spec, std::uint64_t n) {
    const Region region = solve_region(spec);
    std::vector<std::uint64_t> num;
    std::vector<std::uint64_t> den;
    for_each_point(spec, region, static_cast<std::int64_t>(n), [&](std::uint64_t a, std::uint64_t b) {
        num.push_back(a);
        den.push_back(b);
    });
    ExactRatio value = make_ratio(product_of(num), product_of(den));
    if (value.get_den() == 1) return BigInt(value.get_num());
    return value;
}

std::int64_t valuate(const FormulaSpec& spec, std::uint64_t n, std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("valuate: " + std::to_string(p) + " is not prime");
    const Region region = solve_region(spec);
    std::int64_t total = 0;
    for_each_point(spec, region, static_cast<std::int64_t>(n), [&](std::uint64_t a, std::uint64_t b) {
        total += valuation_at(a, p) - valuation_at(b, p);
    });
    return total;
}

std::string_view builtin_formula_text(Family family) noexcept {
    switch (family) {
        case Family::PP: return "prod i,j,k : 1<=i<=n, 1<=j<=n, 1<=k<=n : (i+j+k-1)/(i+j+k-2)";
        case Family::SPP: return "prod j,i : 1<=j<=i<=n : (i+j+n-1)/(i+j-1)";
        case Family::TSPP: return "prod i,j,k : 1<=i<=j<=k<=n : (i+j+k-1)/(i+j+k-2)";
        case Family::TSSCPP: return "prod i,j : 1<=i<=j<=n : (i+j+n-1)/(i+j+i-1)";
    }
    return "";
}

const FormulaSpec& builtin_formula(Family family) {
    static const std::array<FormulaSpec, 4> specs = {
        parse_formula(builtin_formula_text(Family::PP)),
        parse_formula(builtin_formula_text(Family::SPP)),
        parse_formula(builtin_formula_text(Family::TSPP)),
        parse_formula(builtin_formula_text(Family::TSSCPP)),
    };
    return specs[static_cast<std::size_t>(family)];
}

}  // namespace ppval
