#pragma once

#include <tame/parser.hpp>
#include <tame/polynomial.hpp>

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace tame {

/// Formal combination sum_{i<j} c_ij [x_i, x_j]. Only nonzero coefficients
/// are stored; indices are 0-based.
class BracketValue {
public:
    using Pair = std::pair<std::size_t, std::size_t>;

    explicit BracketValue(std::size_t arity) : arity_(arity) {}

    std::size_t arity() const { return arity_; }
    const std::map<Pair, Polynomial>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Polynomial coefficient(std::size_t i, std::size_t j) const {
        auto it = coeffs_.find({i, j});
        return it == coeffs_.end() ? Polynomial(arity_) : it->second;
    }

    void set(std::size_t i, std::size_t j, Polynomial c) {
        if (i >= j || j >= arity_) throw DomainError("bracket index pair out of range");
        if (c.is_zero())
            coeffs_.erase({i, j});
        else
            coeffs_.insert_or_assign({i, j}, std::move(c));
    }

    friend bool operator==(const BracketValue&, const BracketValue&) = default;

private:
    std::size_t arity_;
    std::map<Pair, Polynomial> coeffs_;
};

inline BracketValue poisson_bracket(const Polynomial& f, const Polynomial& g) {
    if (f.arity() != g.arity()) throw DomainError("poisson bracket: arity mismatch");
    const std::size_t n = f.arity();
    if (n < 2) throw DomainError("poisson bracket needs at least two variables");
    std::vector<Polynomial> df, dg;
    for (std::size_t i = 0; i < n; ++i) {
        df.push_back(derivative(f, i));
        dg.push_back(derivative(g, i));
    }
    BracketValue out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.set(i, j, df[i] * dg[j] - df[j] * dg[i]);
    return out;
}

/// Each symbol [x_i, x_j] carries degree 2.
inline Degree bracket_degree(const BracketValue& b) {
    Degree best = kNegInfinity;
    for (const auto& [ij, c] : b.coefficients()) best = std::max(best, c.degree() + Degree(2));
    return best;
}

inline bool algebraically_dependent(const Polynomial& f, const Polynomial& g) {
    return poisson_bracket(f, g).is_zero();
}

inline std::string print_bracket(const BracketValue& b, const VariableNames& vars) {
    if (b.is_zero()) return "0";
    std::string out;
    for (const auto& [ij, c] : b.coefficients()) {
        if (!out.empty()) out += " + ";
        out += "(" + print_polynomial(c, vars) + ")·[" + vars[ij.first] + "," +
               vars[ij.second] + "]";
    }
    return out;
}

/// For homogeneous a and b, whether a lies in k[b], i.e. a = c * b^m.
inline bool in_generated_subalgebra(const Polynomial& a, const Polynomial& b) {
    if (!a.is_homogeneous() || !b.is_homogeneous()) throw DomainError("subalgebra test needs homogeneous input");
    if (a.is_constant()) return true;
    const Degree db = b.degree();
    if (db <= Degree(0)) return false;
    const std::int64_t da = a.degree().value();
    if (da % db.value() != 0) return false;
    const Polynomial bm = pow(b, static_cast<unsigned>(da / db.value()));
    if (bm.size() != a.size()) return false;
    const Rational c = a.terms().begin()->second / bm.terms().begin()->second;
    return a == c * bm;
}

struct StarReducedReport {
    bool independent = false;        // [f,g] != 0
    bool leading_dependent = false;  // [lf(f), lf(g)] == 0
    bool lf_f_outside_g = false;     // lf(f) not in k[lf(g)]
    bool lf_g_outside_f = false;     // lf(g) not in k[lf(f)]

    bool holds() const { return independent && leading_dependent && lf_f_outside_g && lf_g_outside_f; }
    bool weak_holds() const { return independent && lf_f_outside_g && lf_g_outside_f; }

    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        if (!independent) out.emplace_back("f and g are algebraically dependent");
        if (!leading_dependent) out.emplace_back("leading forms are algebraically independent");
        if (!lf_f_outside_g) out.emplace_back("leading form of f is a polynomial in the leading form of g");
        if (!lf_g_outside_f) out.emplace_back("leading form of g is a polynomial in the leading form of f");
        return out;
    }
};

inline StarReducedReport star_reduced_report(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("star-reduced test on the zero polynomial");
    const Polynomial lf = leading_form(f);
    const Polynomial lg = leading_form(g);
    StarReducedReport r;
    r.independent = !algebraically_dependent(f, g);
    r.leading_dependent = algebraically_dependent(lf, lg);
    r.lf_f_outside_g = !in_generated_subalgebra(lf, lg);
    r.lf_g_outside_f = !in_generated_subalgebra(lg, lf);
    return r;
}

inline bool is_star_reduced(const Polynomial& f, const Polynomial& g) {
    return star_reduced_report(f, g).holds();
}

/// Independence, and neither leading form a polynomial in the other; the
/// dependence requirement on the leading forms is dropped.
inline bool is_weak_pair(const Polynomial& f, const Polynomial& g) {
    return star_reduced_report(f, g).weak_holds();
}

/// Evaluation of the lower bound
///   deg G(f,g) >= q (p deg g - deg f - deg g + deg [f,g]) + r deg g,
/// with p = deg f / gcd(deg f, deg g) and deg_y G = p q + r.
struct SuReport {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t r = 0;
    Degree lhs_degree;
    std::int64_t rhs_bound = 0;
    Degree bracket_degree;
    bool holds = false;
};

inline SuReport su_bound(const Polynomial& f, const Polynomial& g, const Polynomial& G) {
    if (G.arity() != 2) throw DomainError("su_bound: G must be a polynomial in two variables");
    if (G.is_zero()) throw DomainError("su_bound: G is zero");
    const auto report = star_reduced_report(f, g);
    if (!report.weak_holds()) {
        std::string why = "su_bound precondition failed:";
        for (const auto& w : report.failures())
            if (w.find("leading forms are") == std::string::npos) why += " " + w + ";";
        throw DomainError(why);
    }
    const std::int64_t df = f.degree().value();
    const std::int64_t dg = g.degree().value();
    if (df <= 0 || dg <= 0) throw DomainError("su_bound: f and g must be nonconstant");

    SuReport out;
    out.p = df / std::gcd(df, dg);
    const std::int64_t deg_y = G.degree_in(1).value();
    out.q = deg_y / out.p;
    out.r = deg_y % out.p;
    out.bracket_degree = bracket_degree(poisson_bracket(f, g));
    out.lhs_degree = compose(G, {f, g}).degree();
    out.rhs_bound = out.q * (out.p * dg - df - dg + out.bracket_degree.value()) + out.r * dg;
    out.holds = out.lhs_degree >= Degree(out.rhs_bound);
    return out;
}

} // namespace tame
