#pragma once

#include <tame/error.hpp>
#include <tame/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tame {

/// Exponent vector of fixed arity. Total degree is cached.
class Monomial {
public:
    using Exponent = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) { recount(); }
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { recount(); }

    static Monomial variable(std::size_t arity, std::size_t var, Exponent power = 1) {
        Monomial m(arity);
        m.exps_.at(var) = power;
        m.degree_ = power;
        return m;
    }

    std::size_t arity() const { return exps_.size(); }
    std::uint64_t degree() const { return degree_; }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out(a.arity());
        for (std::size_t i = 0; i < a.arity(); ++i) out.exps_[i] = a.exps_[i] + b.exps_[i];
        out.degree_ = a.degree_ + b.degree_;
        return out;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < arity(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// other / *this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const {
        Monomial out(arity());
        for (std::size_t i = 0; i < arity(); ++i) out.exps_[i] = other.exps_[i] - exps_[i];
        out.degree_ = other.degree_ - degree_;
        return out;
    }

    /// Graded lexicographic order, variable 0 largest.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        return a.exps_ <=> b.exps_;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    void recount() {
        degree_ = 0;
        for (auto e : exps_) degree_ += e;
    }

    std::vector<Exponent> exps_;
    std::uint64_t degree_ = 0;
};

/// Sparse polynomial over Q. Terms iterate in descending graded-lex order and
/// no zero coefficient is ever stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, std::greater<>>;

    Polynomial() : Polynomial(3) {}
    explicit Polynomial(std::size_t arity) : arity_(arity) {
        if (arity == 0) throw DomainError("polynomial arity must be positive");
    }

    static Polynomial constant(std::size_t arity, const Rational& c) {
        Polynomial p(arity);
        if (c != 0) p.terms_.emplace(Monomial(arity), c);
        return p;
    }

    static Polynomial variable(std::size_t arity, std::size_t var) {
        if (var >= arity) throw DomainError("variable index out of range");
        Polynomial p(arity);
        p.terms_.emplace(Monomial::variable(arity, var), Rational(1));
        return p;
    }

    static Polynomial term(const Rational& c, Monomial m) {
        Polynomial p(m.arity());
        if (c != 0) p.terms_.emplace(std::move(m), c);
        return p;
    }

    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Degree degree() const {
        if (terms_.empty()) return kNegInfinity;
        return Degree(static_cast<std::int64_t>(terms_.begin()->first.degree()));
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
    }

    bool is_constant() const { return terms_.empty() || terms_.begin()->first.is_one(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Largest exponent of variable `var` over all terms; -inf for zero.
    Degree degree_in(std::size_t var) const {
        if (var >= arity_) throw DomainError("variable index out of range");
        if (terms_.empty()) return kNegInfinity;
        std::int64_t best = 0;
        for (const auto& [m, c] : terms_) best = std::max<std::int64_t>(best, m[var]);
        return Degree(best);
    }

    /// Part of total degree exactly `d`.
    Polynomial homogeneous_component(std::uint64_t d) const {
        Polynomial out(arity_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
        return out;
    }

    void add_term(const Monomial& m, const Rational& c) {
        check_arity(m.arity());
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& q) {
        check_arity(q.arity_);
        for (const auto& [m, c] : q.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& q) {
        check_arity(q.arity_);
        for (const auto& [m, c] : q.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
    friend Polynomial operator-(Polynomial p) {
        for (auto& [m, c] : p.terms_) c = -c;
        return p;
    }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        p.check_arity(q.arity_);
        Polynomial out(p.arity_);
        if (p.is_zero() || q.is_zero()) return out;
        const Polynomial& outer = p.size() <= q.size() ? p : q;
        const Polynomial& inner = p.size() <= q.size() ? q : p;
        Rational prod;
        for (const auto& [ma, ca] : outer.terms_) {
            for (const auto& [mb, cb] : inner.terms_) {
                prod = ca * cb;
                out.add_term(ma * mb, prod);
            }
        }
        return out;
    }

    Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    void check_arity(std::size_t other) const {
        if (other != arity_) throw DomainError("polynomial arity mismatch");
    }

    std::size_t arity_;
    TermMap terms_;
};

inline Degree degree(const Polynomial& p) { return p.degree(); }

inline Polynomial pow(const Polynomial& base, std::uint64_t exponent) {
    Polynomial result = Polynomial::constant(base.arity(), 1);
    Polynomial acc = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= acc;
        exponent >>= 1U;
        if (exponent > 0) acc *= acc;
    }
    return result;
}

/// Highest homogeneous component.
inline Polynomial leading_form(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("leading form of the zero polynomial");
    return p.homogeneous_component(static_cast<std::uint64_t>(p.degree().value()));
}

/// Formal partial derivative with respect to variable `var` (0-based).
inline Polynomial derivative(const Polynomial& p, std::size_t var) {
    if (var >= p.arity()) throw DomainError("derivative variable index out of range");
    Polynomial out(p.arity());
    for (const auto& [m, c] : p.terms()) {
        const auto e = m[var];
        if (e == 0) continue;
        std::vector<Monomial::Exponent> exps(m.exponents().begin(), m.exponents().end());
        exps[var] = e - 1;
        out.add_term(Monomial(std::move(exps)), c * e);
    }
    return out;
}

/// Substitutes args[i] for variable i of p. The result has the arity of the
/// arguments. Powers of each argument are computed once.
inline Polynomial compose(const Polynomial& p, std::span<const Polynomial> args) {
    if (args.size() != p.arity())
        throw DomainError("compose: argument count does not match polynomial arity");
    const std::size_t target_arity = args.empty() ? 1 : args.front().arity();
    for (const auto& a : args)
        if (a.arity() != target_arity) throw DomainError("compose: arguments differ in arity");

    std::vector<std::vector<Polynomial>> powers(args.size());
    for (std::size_t i = 0; i < args.size(); ++i)
        powers[i].push_back(Polynomial::constant(target_arity, 1));
    auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[i];
        while (cache.size() <= e) cache.push_back(cache.back() * args[i]);
        return cache[e];
    };

    Polynomial out(target_arity);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(target_arity, c);
        for (std::size_t i = 0; i < m.arity(); ++i)
            if (m[i] > 0) t *= power(i, m[i]);
        out += t;
    }
    return out;
}

inline Polynomial compose(const Polynomial& p, std::initializer_list<Polynomial> args) {
    return compose(p, std::span<const Polynomial>(args.begin(), args.size()));
}

/// Exact division test for homogeneous polynomials: returns q with f = q*d,
/// or nullopt when d does not divide f.
inline std::optional<Polynomial> divides_homogeneous(const Polynomial& d, const Polynomial& f) {
    if (d.is_zero() || f.is_zero()) throw DomainError("divides_homogeneous: zero input");
    if (!d.is_homogeneous() || !f.is_homogeneous())
        throw DomainError("divides_homogeneous: input is not homogeneous");
    if (d.arity() != f.arity()) throw DomainError("polynomial arity mismatch");

    const auto& [lead_m, lead_c] = *d.terms().begin();
    Polynomial quotient(f.arity());
    Polynomial rem = f;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().begin();
        if (!lead_m.divides(rm)) return std::nullopt;
        Polynomial t = Polynomial::term(rc / lead_c, lead_m.quotient_of(rm));
        quotient += t;
        rem -= t * d;
    }
    return quotient;
}

/// Total order used for deterministic tie-breaking: compares term lists from
/// the leading term down, monomial first and then coefficient.
inline std::strong_ordering compare_grlex(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (auto c = ia->first <=> ib->first; c != 0) return c;
        if (ia->second != ib->second)
            return ia->second < ib->second ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
}

} // namespace tame
