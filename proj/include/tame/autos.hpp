#pragma once

#include <tame/numsemi.hpp>
#include <tame/parser.hpp>
#include <tame/polynomial.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace tame {

/// x_index -> scalar * x_index + shift(other variables). Index is 0-based.
struct ElementaryAuto {
    std::size_t index = 0;
    Rational scalar = 1;
    Polynomial shift;

    ElementaryAuto(std::size_t i, Rational alpha, Polynomial s)
        : index(i), scalar(std::move(alpha)), shift(std::move(s)) {
        if (index >= shift.arity()) throw DomainError("elementary step index out of range");
        if (scalar == 0) throw DomainError("elementary step scalar must be nonzero");
        if (shift.degree_in(index) > Degree(0))
            throw DomainError("elementary step shift depends on its own variable");
    }

    std::size_t arity() const { return shift.arity(); }
    friend bool operator==(const ElementaryAuto&, const ElementaryAuto&) = default;
};

/// Reorders components: the new component m is the old component order[m].
struct Permutation {
    std::vector<std::size_t> order;

    explicit Permutation(std::vector<std::size_t> o) : order(std::move(o)) {
        std::vector<bool> seen(order.size(), false);
        for (auto i : order) {
            if (i >= order.size() || seen[i]) throw DomainError("permutation is not a bijection");
            seen[i] = true;
        }
    }

    std::size_t arity() const { return order.size(); }

    Permutation inverse() const {
        std::vector<std::size_t> inv(order.size());
        for (std::size_t m = 0; m < order.size(); ++m) inv[order[m]] = m;
        return Permutation(std::move(inv));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

using TameStep = std::variant<ElementaryAuto, Permutation>;

inline std::size_t step_arity(const TameStep& s) {
    return std::visit([](const auto& v) { return v.arity(); }, s);
}

class TameWord {
public:
    explicit TameWord(std::size_t arity = 3) : arity_(arity) {}
    TameWord(std::size_t arity, std::vector<TameStep> steps) : arity_(arity) {
        for (auto& s : steps) push_back(std::move(s));
    }

    void push_back(TameStep step) {
        if (step_arity(step) != arity_) throw DomainError("tame word: step arity mismatch");
        steps_.push_back(std::move(step));
    }

    void append(const TameWord& other) {
        for (const auto& s : other.steps_) push_back(s);
    }

    std::size_t arity() const { return arity_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    const std::vector<TameStep>& steps() const { return steps_; }

    friend bool operator==(const TameWord&, const TameWord&) = default;

private:
    std::size_t arity_;
    std::vector<TameStep> steps_;
};

struct PolyMap {
    std::vector<Polynomial> components;

    static PolyMap identity(std::size_t n) {
        PolyMap f;
        for (std::size_t i = 0; i < n; ++i) f.components.push_back(Polynomial::variable(n, i));
        return f;
    }

    std::size_t arity() const { return components.size(); }
    const Polynomial& operator[](std::size_t i) const { return components[i]; }

    friend bool operator==(const PolyMap&, const PolyMap&) = default;
};

using MDeg = std::vector<Degree>;

inline MDeg mdeg(const PolyMap& f) {
    MDeg out;
    for (const auto& c : f.components) out.push_back(c.degree());
    return out;
}

inline std::string print_mdeg(const MDeg& d) {
    std::string out = "(";
    for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + d[i].str();
    return out + ")";
}

/// Applies a step after the map: the step's formulas are evaluated at the
/// current components.
inline PolyMap apply_step(const PolyMap& f, const TameStep& step) {
    if (step_arity(step) != f.arity()) throw DomainError("step arity does not match map");
    PolyMap out = f;
    if (const auto* e = std::get_if<ElementaryAuto>(&step)) {
        out.components[e->index] =
            f.components[e->index] * e->scalar + compose(e->shift, f.components);
    } else {
        const auto& p = std::get<Permutation>(step);
        for (std::size_t m = 0; m < p.order.size(); ++m) out.components[m] = f.components[p.order[m]];
    }
    return out;
}

inline PolyMap compose_word(const TameWord& w) {
    PolyMap f = PolyMap::identity(w.arity());
    for (const auto& s : w.steps()) f = apply_step(f, s);
    return f;
}

/// Word whose composition undoes w when appended after it.
inline TameWord inverse_word(const TameWord& w) {
    TameWord out(w.arity());
    for (auto it = w.steps().rbegin(); it != w.steps().rend(); ++it) {
        if (const auto* e = std::get_if<ElementaryAuto>(&*it)) {
            const Rational inv = 1 / e->scalar;
            out.push_back(ElementaryAuto(e->index, inv, -(e->shift * inv)));
        } else {
            out.push_back(std::get<Permutation>(*it).inverse());
        }
    }
    return out;
}

namespace detail {

inline Polynomial determinant(std::vector<std::vector<Polynomial>> m, std::size_t arity) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(arity, 1);
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Polynomial det(arity);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][col] * determinant(std::move(minor), arity);
        if (col % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

} // namespace detail

inline Polynomial jacobian_det(const PolyMap& f) {
    const std::size_t n = f.arity();
    std::vector<std::vector<Polynomial>> jac(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (f.components[i].arity() != n) throw DomainError("jacobian: component arity mismatch");
        for (std::size_t j = 0; j < n; ++j) jac[i].push_back(derivative(f.components[i], j));
    }
    return detail::determinant(std::move(jac), n);
}

namespace detail {

inline Polynomial var3(std::size_t i) { return Polynomial::variable(3, i); }

inline Polynomial monomial3(std::uint32_t ex, std::uint32_t ey, std::uint32_t ez) {
    return Polynomial::term(1, Monomial{ex, ey, ez});
}

inline void check_witness(const TameWord& w, const MDeg& expected) {
    const MDeg got = mdeg(compose_word(w));
    if (got != expected)
        throw DomainError("witness post-check failed: composed multidegree " + print_mdeg(got) +
                          ", expected " + print_mdeg(expected));
}

} // namespace detail

/// [x -> x + z^d1; y -> y + z^d2; z -> z + x^s y^t], realizing
/// (d1, d2, s*d1 + t*d2).
inline TameWord witness_semigroup(std::int64_t d1, std::int64_t d2, Representation rep) {
    if (d1 < 3 || d2 < d1) throw DomainError("witness_semigroup requires 3 <= d1 <= d2");
    if (rep.s < 0 || rep.t < 0 || (rep.s == 0 && rep.t == 0))
        throw DomainError("witness_semigroup requires a nonzero representation");
    const std::int64_t d3 = rep.s * d1 + rep.t * d2;
    if (d3 < d2) throw DomainError("witness_semigroup requires d3 = s*d1 + t*d2 >= d2");
    using detail::monomial3;
    TameWord w(3);
    w.push_back(ElementaryAuto(0, 1, monomial3(0, 0, static_cast<std::uint32_t>(d1))));
    w.push_back(ElementaryAuto(1, 1, monomial3(0, 0, static_cast<std::uint32_t>(d2))));
    w.push_back(ElementaryAuto(
        2, 1, monomial3(static_cast<std::uint32_t>(rep.s), static_cast<std::uint32_t>(rep.t), 0)));
    detail::check_witness(w, {d1, d2, d3});
    return w;
}

/// [x -> x + y^d; z -> z + x y^(d3-d); y -> y + x], realizing (d, d, d3).
/// The first component is x + y^d, the second y + x + y^d and the third
/// z + x y^(d3-d) + y^d3.
inline TameWord witness_equal_pair(std::int64_t d, std::int64_t d3) {
    if (d < 3 || d3 < d) throw DomainError("witness_equal_pair requires 3 <= d <= d3");
    using detail::monomial3;
    TameWord w(3);
    w.push_back(ElementaryAuto(0, 1, monomial3(0, static_cast<std::uint32_t>(d), 0)));
    w.push_back(ElementaryAuto(2, 1, monomial3(1, static_cast<std::uint32_t>(d3 - d), 0)));
    w.push_back(ElementaryAuto(1, 1, detail::var3(0)));
    detail::check_witness(w, {d, d, d3});
    return w;
}

/// [y -> y + x^d2; z -> z + x^d3], realizing (1, d2, d3).
inline TameWord witness_linear_first(std::int64_t d2, std::int64_t d3) {
    if (d2 < 1 || d3 < d2) throw DomainError("witness_linear_first requires 1 <= d2 <= d3");
    using detail::monomial3;
    TameWord w(3);
    w.push_back(ElementaryAuto(1, 1, monomial3(static_cast<std::uint32_t>(d2), 0, 0)));
    w.push_back(ElementaryAuto(2, 1, monomial3(static_cast<std::uint32_t>(d3), 0, 0)));
    detail::check_witness(w, {1, d2, d3});
    return w;
}

namespace example {

/// g = z + 3x^2y + 3xy^3 + y^5
inline Polynomial g() { return parse_polynomial("z + 3*x^2*y + 3*x*y^3 + y^5"); }

/// h = y - 6(x+y^2)^2 g + 8(x+y^2) g^3 - 16/5 g^5
inline Polynomial h(const Polynomial& gg) {
    const Polynomial a = parse_polynomial("x + y^2");
    return parse_polynomial("y") - Rational(6) * pow(a, 2) * gg + Rational(8) * a * pow(gg, 3) -
           Rational(16, 5) * pow(gg, 5);
}

} // namespace example

/// The map (f1, f2, f3) with f1 = x + y^2 - g^2, f2 = 256/25 f1^5 + g + h^2
/// and f3 = h, built from the given g. With the default g it has multidegree
/// (10, 23, 25); the drop of f2 from degree 50 relies on exact cancellation.
inline PolyMap build_example_map(const Polynomial& g) {
    const Polynomial h = example::h(g);
    const Polynomial f1 = parse_polynomial("x + y^2") - pow(g, 2);
    const Polynomial f2 = Rational(256, 25) * pow(f1, 5) + g + pow(h, 2);
    return PolyMap{{f1, f2, h}};
}

inline PolyMap build_example_map() { return build_example_map(example::g()); }

/// Elementary word composing to build_example_map():
///   z -> z + 3x^2y + 3xy^3 + y^5        (x, y, g)
///   x -> x + y^2                         (x + y^2, y, g)
///   x -> x - z^2                         (f1, y, g)
///   y -> y + P(x, z)                     (f1, h, g)
///   z -> z + 256/25 x^5 + y^2            (f1, h, f2)
///   swap components 2 and 3              (f1, f2, h)
/// where P(u, w) = -6(u+w^2)^2 w + 8(u+w^2) w^3 - 16/5 w^5, so that
/// P(f1, g) = h - y because f1 + g^2 = x + y^2.
inline TameWord example_word() {
    TameWord w(3);
    w.push_back(ElementaryAuto(2, 1, parse_polynomial("3*x^2*y + 3*x*y^3 + y^5")));
    w.push_back(ElementaryAuto(0, 1, parse_polynomial("y^2")));
    w.push_back(ElementaryAuto(0, 1, parse_polynomial("-z^2")));
    const Polynomial a = parse_polynomial("x + z^2");
    const Polynomial z = detail::var3(2);
    const Polynomial shift = Rational(-6) * pow(a, 2) * z + Rational(8) * a * pow(z, 3) -
                             Rational(16, 5) * pow(z, 5);
    w.push_back(ElementaryAuto(1, 1, shift));
    w.push_back(ElementaryAuto(2, 1, parse_polynomial("256/25*x^5 + y^2")));
    w.push_back(Permutation({0, 2, 1}));
    return w;
}

/// The affine step z -> z - y; appending its inverse z -> z + y to
/// example_word() gives the form (f1, f2, f2 + h).
inline ElementaryAuto example_affine_step() { return ElementaryAuto(2, 1, parse_polynomial("-y")); }

inline TameWord example_type_one_word() {
    TameWord w = example_word();
    w.push_back(ElementaryAuto(2, 1, parse_polynomial("y")));
    return w;
}

// Word files: optional "vars:" header (default x,y,z), then one step per
// line, "elem i alpha <poly>" or "perm i j k" with 1-based indices.

inline std::string print_step(const TameStep& s, const VariableNames& vars) {
    if (const auto* e = std::get_if<ElementaryAuto>(&s))
        return "elem " + std::to_string(e->index + 1) + " " + e->scalar.get_str() + " " +
               print_polynomial(e->shift, vars);
    std::string out = "perm";
    for (auto i : std::get<Permutation>(s).order) out += " " + std::to_string(i + 1);
    return out;
}

inline std::string print_word_file(const TameWord& w, const VariableNames& vars) {
    std::string out = "vars: ";
    for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? "," : "") + vars[i];
    out += '\n';
    for (const auto& s : w.steps()) out += print_step(s, vars) + '\n';
    return out;
}

struct ParsedWord {
    VariableNames variables;
    TameWord word;
};

inline ParsedWord parse_word_file(std::string_view text) {
    auto lines = significant_lines(text);
    ParsedWord out{default_variables(3), TameWord(3)};
    std::size_t first = 0;
    if (!lines.empty() && detail::trim(lines.front().second).substr(0, 5) == "vars:") {
        out.variables = parse_vars_declaration(lines.front().second, lines.front().first);
        out.word = TameWord(out.variables.size());
        first = 1;
    }
    const std::size_t n = out.variables.size();
    auto parse_index = [&](const std::string& tok, std::size_t line_no) -> std::size_t {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || v < 1 || static_cast<std::size_t>(v) > n)
            throw ParseError("invalid component index '" + tok + "'", line_no, 1);
        return static_cast<std::size_t>(v - 1);
    };

    for (std::size_t li = first; li < lines.size(); ++li) {
        const auto& [line_no, line] = lines[li];
        std::istringstream in(line);
        std::string kind;
        in >> kind;
        try {
            if (kind == "elem") {
                std::string idx, alpha;
                if (!(in >> idx >> alpha)) throw ParseError("incomplete elem step", line_no, 1);
                const std::size_t i = parse_index(idx, line_no);
                const Polynomial scalar_poly = parse_polynomial(alpha, out.variables, line_no);
                if (!scalar_poly.is_constant() || scalar_poly.is_zero())
                    throw ParseError("elem scalar must be a nonzero rational", line_no, 1);
                const Rational scalar = scalar_poly.coefficient(Monomial(n));
                std::string rest;
                std::getline(in, rest);
                out.word.push_back(
                    ElementaryAuto(i, scalar, parse_polynomial(rest, out.variables, line_no)));
            } else if (kind == "perm") {
                std::vector<std::size_t> order;
                std::string tok;
                while (in >> tok) order.push_back(parse_index(tok, line_no));
                if (order.size() != n) throw ParseError("perm needs one index per variable", line_no, 1);
                out.word.push_back(Permutation(std::move(order)));
            } else {
                throw ParseError("unknown step kind '" + kind + "'", line_no, 1);
            }
        } catch (const DomainError& e) {
            throw ParseError(e.what(), line_no, 1);
        }
    }
    return out;
}

} // namespace tame
