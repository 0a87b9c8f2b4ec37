#pragma once

// Text form of polynomials:
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*'? factor)*
//   factor   := rational | variable ('^' nat)?
//   rational := int ('/' posint)?
//
// A '*' may be omitted before a variable ("3x^2y"); printing always emits it.
// Map files hold one polynomial per line after a "vars: x,y,z" header; '#'
// starts a comment.

#include <tame/error.hpp>
#include <tame/polynomial.hpp>

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace tame {

using VariableNames = std::vector<std::string>;

inline VariableNames default_variables(std::size_t arity) {
    if (arity <= 3) {
        VariableNames names{"x", "y", "z"};
        names.resize(arity);
        return names;
    }
    VariableNames names;
    for (std::size_t i = 1; i <= arity; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

namespace detail {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline void validate_variables(const VariableNames& vars) {
    if (vars.empty()) throw DomainError("variable list is empty");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto& v = vars[i];
        if (v.empty() || !is_ident_start(v[0]))
            throw DomainError("invalid variable name '" + v + "'");
        for (char c : v)
            if (!is_ident_char(c)) throw DomainError("invalid variable name '" + v + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (vars[j] == v) throw DomainError("duplicate variable name '" + v + "'");
    }
}

class PolynomialParser {
public:
    PolynomialParser(std::string_view src, const VariableNames& vars, std::size_t line)
        : src_(src), vars_(vars), line_(line) {}

    Polynomial parse() {
        skip_ws();
        if (at_end()) fail("empty expression");
        Polynomial result(vars_.size());
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        while (true) {
            Polynomial t = parse_term();
            if (negate)
                result -= t;
            else
                result += t;
            skip_ws();
            if (at_end()) break;
            if (peek() == '+' || peek() == '-') {
                negate = peek() == '-';
                ++pos_;
                continue;
            }
            fail(std::string("unexpected character '") + peek() + "'");
        }
        return result;
    }

private:
    Polynomial parse_term() {
        Rational coeff = 1;
        Monomial mono(vars_.size());
        parse_factor(coeff, mono);
        while (true) {
            skip_ws();
            if (at_end()) break;
            if (peek() == '*') {
                ++pos_;
                parse_factor(coeff, mono);
            } else if (is_ident_start(peek())) {
                parse_factor(coeff, mono);
            } else {
                break;
            }
        }
        return Polynomial::term(coeff, mono);
    }

    void parse_factor(Rational& coeff, Monomial& mono) {
        skip_ws();
        if (at_end()) fail("expected a number or variable");
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= parse_rational();
        } else if (is_ident_start(c)) {
            parse_variable_power(mono);
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }

    Rational parse_rational() {
        const std::size_t start = pos_;
        Integer num(read_digits());
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail_at(start, "malformed rational: expected positive denominator");
            Integer den(read_digits());
            if (den == 0) fail_at(start, "malformed rational: zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    void parse_variable_power(Monomial& mono) {
        const std::size_t start = pos_;
        while (!at_end() && is_ident_char(peek())) ++pos_;
        const std::string_view ident = src_.substr(start, pos_ - start);
        std::vector<std::size_t> pieces = split_identifier(ident, start);

        std::uint64_t power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected exponent after '^'");
            const std::size_t exp_start = pos_;
            const std::string digits = read_digits();
            if (digits.size() > 10 || std::stoull(digits) > kMaxExponent)
                fail_at(exp_start, "exponent overflow");
            power = std::stoull(digits);
        }
        // The exponent binds to the last variable of a juxtaposed run ("xy^2").
        std::vector<Monomial::Exponent> exps(mono.exponents().begin(), mono.exponents().end());
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            const std::uint64_t add = (i + 1 == pieces.size()) ? power : 1;
            const std::uint64_t total = exps[pieces[i]] + add;
            if (total > kMaxExponent) fail_at(start, "exponent overflow");
            exps[pieces[i]] = static_cast<Monomial::Exponent>(total);
        }
        mono = Monomial(std::move(exps));
    }

    // Resolves an identifier to a variable, or to a run of variables written
    // without '*' (longest names first).
    std::vector<std::size_t> split_identifier(std::string_view ident, std::size_t start) {
        std::vector<std::size_t> out;
        std::size_t at = 0;
        while (at < ident.size()) {
            std::size_t best = vars_.size();
            std::size_t best_len = 0;
            for (std::size_t v = 0; v < vars_.size(); ++v) {
                const auto& name = vars_[v];
                if (name.size() > best_len && ident.substr(at, name.size()) == name) {
                    best = v;
                    best_len = name.size();
                }
            }
            if (best == vars_.size())
                fail_at(start, "unknown identifier '" + std::string(ident) + "'");
            out.push_back(best);
            at += best_len;
        }
        return out;
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
        throw ParseError(msg, line_, pos + 1);
    }

    static constexpr std::uint64_t kMaxExponent = std::numeric_limits<std::int32_t>::max();

    std::string_view src_;
    const VariableNames& vars_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace detail

inline Polynomial parse_polynomial(std::string_view src, const VariableNames& vars,
                                   std::size_t line = 1) {
    detail::validate_variables(vars);
    return detail::PolynomialParser(src, vars, line).parse();
}

inline Polynomial parse_polynomial(std::string_view src) {
    return parse_polynomial(src, default_variables(3));
}

inline std::string print_monomial(const Monomial& m, const VariableNames& vars) {
    std::string out;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars[i];
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

inline std::string print_polynomial(const Polynomial& p, const VariableNames& vars) {
    if (vars.size() != p.arity()) throw DomainError("variable name count does not match arity");
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const Rational mag = abs(c);
        if (m.is_one()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += print_monomial(m, vars);
        }
    }
    return out;
}

inline std::string print_polynomial(const Polynomial& p) {
    return print_polynomial(p, default_variables(p.arity()));
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << print_polynomial(p);
}

/// Contents of a map file: declared variable names and one polynomial per
/// non-comment line.
struct PolynomialList {
    VariableNames variables;
    std::vector<Polynomial> polynomials;
};

inline VariableNames parse_vars_declaration(std::string_view line, std::size_t line_no) {
    line = detail::trim(line);
    constexpr std::string_view kPrefix = "vars:";
    if (line.substr(0, kPrefix.size()) != kPrefix)
        throw ParseError("expected 'vars:' declaration", line_no, 1);
    VariableNames vars;
    std::string_view rest = line.substr(kPrefix.size());
    while (true) {
        const auto comma = rest.find(',');
        vars.emplace_back(detail::trim(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    try {
        detail::validate_variables(vars);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), line_no, 1);
    }
    return vars;
}

/// Splits text into (line number, content) pairs with comments and blank
/// lines removed.
inline std::vector<std::pair<std::size_t, std::string>> significant_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (detail::trim(line).empty()) continue;
        out.emplace_back(line_no, line);
    }
    return out;
}

inline PolynomialList parse_map_file(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError("missing 'vars:' declaration", 1, 1);
    PolynomialList out;
    out.variables = parse_vars_declaration(lines.front().second, lines.front().first);
    for (std::size_t i = 1; i < lines.size(); ++i)
        out.polynomials.push_back(
            parse_polynomial(lines[i].second, out.variables, lines[i].first));
    return out;
}

inline std::string print_map_file(std::span<const Polynomial> polys, const VariableNames& vars) {
    std::string out = "vars: ";
    for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? "," : "") + vars[i];
    out += '\n';
    for (const auto& p : polys) out += print_polynomial(p, vars) + '\n';
    return out;
}

} // namespace tame
