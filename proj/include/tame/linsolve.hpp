#pragma once

// Exact linear algebra over Q by fraction-free (Bareiss) elimination on
// integer rows. Systems are stored augmented: the last column is the
// right-hand side.

#include <tame/rational.hpp>

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tame {

using IntRow = std::vector<Integer>;

/// Scales a rational row to a primitive integer row with the same zero set
/// and the same solutions.
inline IntRow to_integer_row(std::span<const Rational> row) {
    Integer den = 1;
    for (const auto& q : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    IntRow out;
    out.reserve(row.size());
    Integer content = 0;
    for (const auto& q : row) {
        out.push_back(q.get_num() * (den / q.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
    }
    if (content > 1)
        for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return out;
}

inline void make_primitive(IntRow& row) {
    Integer content = 0;
    for (const auto& v : row) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content > 1)
        for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
}

/// Row echelon form: rows[k] has its leading nonzero entry in column pivots[k].
struct Echelon {
    std::size_t width = 0;
    std::vector<IntRow> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return rows.size(); }

    /// For augmented systems: no pivot lands in the right-hand-side column.
    bool consistent() const { return pivots.empty() || pivots.back() + 1 < width; }
};

/// Fraction-free Gaussian elimination. Every intermediate entry is a minor of
/// the input, so the division by the previous pivot is exact.
inline Echelon fraction_free_echelon(std::vector<IntRow> rows, std::size_t width) {
    Echelon out;
    out.width = width;
    Integer prev = 1;
    Integer tmp;
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const IntRow& prow = rows[r];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            IntRow& row = rows[i];
            if (row[col] == 0) {
                if (prev != 1)
                    for (std::size_t j = col + 1; j < width; ++j) {
                        row[j] *= prow[col];
                        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
                    }
                else
                    for (std::size_t j = col + 1; j < width; ++j) row[j] *= prow[col];
                continue;
            }
            for (std::size_t j = col + 1; j < width; ++j) {
                tmp = prow[col] * row[j] - row[col] * prow[j];
                mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            row[col] = 0;
        }
        prev = prow[col];
        out.pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    for (auto& row : out.rows) make_primitive(row);
    return out;
}

/// A solution of a consistent augmented echelon system with every free
/// variable set to zero.
inline std::optional<std::vector<Rational>> back_substitute(const Echelon& e) {
    if (!e.consistent()) return std::nullopt;
    const std::size_t nvars = e.width - 1;
    std::vector<Rational> x(nvars, Rational(0));
    for (std::size_t k = e.rows.size(); k-- > 0;) {
        const IntRow& row = e.rows[k];
        const std::size_t pc = e.pivots[k];
        Rational acc(row[nvars]);
        for (std::size_t j = pc + 1; j < nvars; ++j)
            if (row[j] != 0 && x[j] != 0) acc -= Rational(row[j]) * x[j];
        x[pc] = acc / Rational(row[pc]);
    }
    return x;
}

/// Solves the augmented rational system [A | b].
inline std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& augmented,
                                                        std::size_t nvars) {
    std::vector<IntRow> rows;
    rows.reserve(augmented.size());
    for (const auto& r : augmented) rows.push_back(to_integer_row(r));
    return back_substitute(fraction_free_echelon(std::move(rows), nvars + 1));
}

} // namespace tame
