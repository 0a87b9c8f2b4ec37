#pragma once

// Search for elementary reductions F_t -> F_t - g(F_j, F_k) that strictly
// lower deg F_t.
//
// g is supported on the monomials u^s v^t with s*deg F_j + t*deg F_k <= cap.
// Each support monomial gets an unknown coefficient; requiring every
// coefficient of F_t - g(F_j, F_k) in degree >= d to vanish is a linear
// system over Q. The smallest d for which the system stays solvable gives
// the residual degree d - 1. Among the solutions, the one with the fewest
// monomials (then the graded-lex least g) is returned.

#include <tame/autos.hpp>
#include <tame/linsolve.hpp>
#include <tame/polynomial.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tame {

struct ReductionQuery {
    PolyMap map;
    std::size_t target = 0; // 0-based component index
    std::int64_t support_degree_cap = 0;
};

struct ReductionResult {
    /// g(u, v) in the two remaining components, u the lower-indexed one.
    Polynomial g{2};
    Polynomial residual{3};
    Degree residual_degree;
    std::size_t first_arg = 0;
    std::size_t second_arg = 0;
};

namespace detail {

// Above this many subset solves the minimum-support search gives up and
// returns the basic solution of the full system instead.
inline constexpr std::size_t kSupportSearchBudget = 50000;

inline std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

// Solves the augmented system restricted to the given columns.
inline std::optional<std::vector<Rational>> solve_on_columns(const std::vector<IntRow>& basis,
                                                             const std::vector<std::size_t>& cols,
                                                             std::size_t rhs_col) {
    std::vector<IntRow> rows;
    rows.reserve(basis.size());
    for (const auto& b : basis) {
        IntRow r;
        r.reserve(cols.size() + 1);
        for (auto c : cols) r.push_back(b[c]);
        r.push_back(b[rhs_col]);
        rows.push_back(std::move(r));
    }
    return back_substitute(fraction_free_echelon(std::move(rows), cols.size() + 1));
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace detail

inline std::optional<ReductionResult> find_elementary_reduction(const ReductionQuery& q) {
    const PolyMap& F = q.map;
    if (F.arity() != 3) throw DomainError("reduction search needs a map of arity 3");
    for (const auto& c : F.components)
        if (c.arity() != 3) throw DomainError("reduction search: component arity mismatch");
    if (q.target >= 3) throw DomainError("reduction target out of range");
    if (F[0] == F[1] || F[0] == F[2] || F[1] == F[2])
        throw DomainError("reduction search needs pairwise distinct components");

    const Polynomial& target = F[q.target];
    const Degree target_deg = target.degree();
    if (target_deg.is_neg_infinity() || target_deg.value() < Degree(1).value()) return std::nullopt;
    if (q.support_degree_cap < target_deg.value())
        throw DomainError("support degree cap is smaller than the target degree");

    const std::size_t j = q.target == 0 ? 1 : 0;
    const std::size_t k = q.target == 2 ? 1 : 2;
    const Degree dj = F[j].degree();
    const Degree dk = F[k].degree();
    if (dj < Degree(1) || dk < Degree(1))
        throw DomainError("reduction search: the other components must be nonconstant");

    // Support monomials u^s v^t, in ascending graded-lex order.
    std::vector<Monomial> support;
    for (std::int64_t s = 0; s * dj.value() <= q.support_degree_cap; ++s)
        for (std::int64_t t = 0; s * dj.value() + t * dk.value() <= q.support_degree_cap; ++t)
            support.push_back(Monomial{static_cast<Monomial::Exponent>(s), static_cast<Monomial::Exponent>(t)});
    std::sort(support.begin(), support.end());
    const std::size_t nvars = support.size();

    // Column c of the system holds the expansion of F_j^s F_k^t.
    std::vector<Polynomial> pow_j{Polynomial::constant(3, 1)};
    std::vector<Polynomial> pow_k{Polynomial::constant(3, 1)};
    std::vector<Polynomial> columns;
    columns.reserve(nvars);
    for (const auto& m : support) {
        while (pow_j.size() <= m[0]) pow_j.push_back(pow_j.back() * F[j]);
        while (pow_k.size() <= m[1]) pow_k.push_back(pow_k.back() * F[k]);
        columns.push_back(pow_j[m[0]] * pow_k[m[1]]);
    }

    // One equation per monomial of the ambient ring, grouped by degree.
    std::map<Monomial, std::vector<Rational>, std::greater<>> equations;
    auto row_for = [&](const Monomial& m) -> std::vector<Rational>& {
        auto [it, inserted] = equations.try_emplace(m);
        if (inserted) it->second.assign(nvars + 1, Rational(0));
        return it->second;
    };
    for (std::size_t c = 0; c < nvars; ++c)
        for (const auto& [m, coef] : columns[c].terms()) row_for(m)[c] = coef;
    for (const auto& [m, coef] : target.terms()) row_for(m)[nvars] = coef;

    std::map<std::uint64_t, std::vector<IntRow>, std::greater<>> rows_by_degree;
    for (const auto& [m, row] : equations) rows_by_degree[m.degree()].push_back(to_integer_row(row));

    // Adds the equations of degree >= d to the running basis.
    Echelon basis;
    basis.width = nvars + 1;
    auto rows_from = [&](std::uint64_t d) {
        std::vector<IntRow> rows = basis.rows;
        for (auto it = rows_by_degree.begin(); it != rows_by_degree.end() && it->first >= d; ++it)
            rows.insert(rows.end(), it->second.begin(), it->second.end());
        return rows;
    };

    const std::uint64_t top = static_cast<std::uint64_t>(target_deg.value());
    std::uint64_t reached = top;
    {
        std::vector<IntRow> rows = rows_from(top);
        basis = fraction_free_echelon(std::move(rows), nvars + 1);
        if (!basis.consistent()) return std::nullopt;
    }
    for (std::uint64_t d = top; d-- > 1;) {
        std::vector<IntRow> rows = basis.rows;
        if (auto it = rows_by_degree.find(d); it != rows_by_degree.end())
            rows.insert(rows.end(), it->second.begin(), it->second.end());
        Echelon next = fraction_free_echelon(std::move(rows), nvars + 1);
        if (!next.consistent()) break;
        basis = std::move(next);
        reached = d;
    }
    // Everything down to degree 1 cancels: F_t is a polynomial in the other
    // two components plus a constant, which no automorphism allows.
    if (reached == 1) return std::nullopt;

    auto make_g = [&](const std::vector<std::size_t>& cols, const std::vector<Rational>& vals) {
        Polynomial g(2);
        for (std::size_t i = 0; i < cols.size(); ++i) g.add_term(support[cols[i]], vals[i]);
        return g;
    };

    std::optional<Polynomial> best;
    std::size_t budget = detail::kSupportSearchBudget;
    for (std::size_t size = 0; size <= std::min(nvars, basis.rank()) && !best; ++size) {
        const std::size_t count = detail::binomial_capped(nvars, size, budget);
        if (count > budget) break;
        budget -= count;
        std::vector<std::size_t> cols(size);
        for (std::size_t i = 0; i < size; ++i) cols[i] = i;
        do {
            auto sol = detail::solve_on_columns(basis.rows, cols, nvars);
            if (!sol) continue;
            Polynomial g = make_g(cols, *sol);
            if (g.size() != size) continue; // a zero entry: already seen at a smaller size
            if (!best || compare_grlex(g, *best) < 0) best = std::move(g);
        } while (size > 0 && detail::next_combination(cols, nvars));
    }
    if (!best) {
        auto sol = back_substitute(basis);
        std::vector<std::size_t> all(nvars);
        for (std::size_t i = 0; i < nvars; ++i) all[i] = i;
        best = make_g(all, *sol);
    }

    ReductionResult out;
    out.g = std::move(*best);
    out.first_arg = j;
    out.second_arg = k;
    out.residual = target - compose(out.g, {F[j], F[k]});
    out.residual_degree = out.residual.degree();
    if (out.residual_degree != Degree(static_cast<std::int64_t>(reached) - 1))
        throw DomainError("reduction post-check failed: residual degree " + out.residual_degree.str() +
                          " does not match the solved system");
    return out;
}

/// Tries targets 3, 2, 1 (0-based 2, 1, 0) and returns the first success.
/// Without an explicit cap each target uses twice its own degree; targets
/// whose degree exceeds an explicit cap are skipped.
inline std::optional<std::pair<std::size_t, ReductionResult>> find_any_reduction(
    const PolyMap& map, std::optional<std::int64_t> cap = std::nullopt) {
    if (map.arity() != 3) throw DomainError("reduction search needs a map of arity 3");
    for (std::size_t t = 3; t-- > 0;) {
        const Degree d = map[t].degree();
        if (d < Degree(1)) continue;
        const std::int64_t c = cap ? *cap : 2 * d.value();
        if (c < d.value()) continue;
        if (auto r = find_elementary_reduction({map, t, c})) return std::make_pair(t, std::move(*r));
    }
    return std::nullopt;
}

} // namespace tame
