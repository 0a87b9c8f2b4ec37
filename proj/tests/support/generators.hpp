#pragma once

// Seeded random generators for property tests.

#include <tame/autos.hpp>
#include <tame/polynomial.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace tame::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Nonzero rational with numerator and denominator bounded by `bound`.
inline Rational random_rational(Rng& rng, std::int64_t bound = 9) {
    std::int64_t num = 0;
    while (num == 0) num = uniform(rng, -bound, bound);
    const std::int64_t den = uniform(rng, 1, bound);
    Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

/// Integer with magnitude up to 2^63 - 1, as a rational.
inline Rational random_wide_integer(Rng& rng) {
    const auto v = static_cast<std::int64_t>(rng() >> 1) * (uniform(rng, 0, 1) ? 1 : -1);
    return Rational(Integer(std::to_string(v)));
}

inline Monomial random_monomial(Rng& rng, std::size_t arity, std::uint32_t max_degree) {
    std::vector<Monomial::Exponent> exps(arity, 0);
    std::uint32_t budget = static_cast<std::uint32_t>(uniform(rng, 0, max_degree));
    while (budget > 0) {
        ++exps[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(arity) - 1))];
        --budget;
    }
    return Monomial(std::move(exps));
}

inline Polynomial random_polynomial(Rng& rng, std::size_t arity, std::uint32_t max_degree, std::size_t max_terms,
                                    std::int64_t coeff_bound = 9) {
    Polynomial p(arity);
    const auto terms = uniform(rng, 0, static_cast<std::int64_t>(max_terms));
    for (std::int64_t i = 0; i < terms; ++i)
        p.add_term(random_monomial(rng, arity, max_degree), random_rational(rng, coeff_bound));
    return p;
}

inline Polynomial random_nonzero_polynomial(Rng& rng, std::size_t arity, std::uint32_t max_degree,
                                            std::size_t max_terms) {
    Polynomial p(arity);
    while (p.is_zero()) p = random_polynomial(rng, arity, max_degree, max_terms);
    return p;
}

inline Polynomial random_homogeneous(Rng& rng, std::size_t arity, std::uint32_t degree, std::size_t max_terms) {
    Polynomial p(arity);
    while (p.is_zero()) {
        const auto terms = uniform(rng, 1, static_cast<std::int64_t>(max_terms));
        for (std::int64_t i = 0; i < terms; ++i) {
            std::vector<Monomial::Exponent> exps(arity, 0);
            for (std::uint32_t k = 0; k < degree; ++k)
                ++exps[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(arity) - 1))];
            p.add_term(Monomial(std::move(exps)), random_rational(rng));
        }
    }
    return p;
}

/// Short word of random elementary steps (and the occasional permutation)
/// in three variables with small shift degrees.
inline TameWord random_word(Rng& rng, std::size_t steps, std::uint32_t max_shift_degree = 2,
                            bool allow_permutations = true) {
    TameWord w(3);
    for (std::size_t s = 0; s < steps; ++s) {
        if (allow_permutations && uniform(rng, 0, 5) == 0) {
            std::vector<std::size_t> order{0, 1, 2};
            std::shuffle(order.begin(), order.end(), rng);
            w.push_back(Permutation(order));
            continue;
        }
        const auto index = static_cast<std::size_t>(uniform(rng, 0, 2));
        Polynomial shift(3);
        const auto terms = uniform(rng, 1, 2);
        for (std::int64_t t = 0; t < terms; ++t) {
            Monomial m = random_monomial(rng, 3, max_shift_degree);
            std::vector<Monomial::Exponent> exps(m.exponents().begin(), m.exponents().end());
            exps[index] = 0;
            shift.add_term(Monomial(std::move(exps)), random_rational(rng, 4));
        }
        w.push_back(ElementaryAuto(index, random_rational(rng, 3), shift));
    }
    return w;
}

} // namespace tame::testing
