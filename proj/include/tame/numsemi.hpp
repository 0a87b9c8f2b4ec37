#pragma once

#include <tame/error.hpp>

#include <cstdint>
#include <numeric>
#include <optional>

namespace tame {

/// Generators of the semigroup aN + bN.
struct SemigroupPair {
    std::int64_t a = 1;
    std::int64_t b = 1;

    SemigroupPair(std::int64_t first, std::int64_t second) : a(first), b(second) {
        if (a < 1 || b < 1) throw DomainError("semigroup generators must be positive");
    }
};

/// l = s*a + t*b.
struct Representation {
    std::int64_t s = 0;
    std::int64_t t = 0;
    friend bool operator==(const Representation&, const Representation&) = default;
};

/// Returns the representation of l with the smallest t, if any.
inline std::optional<Representation> membership(std::int64_t l, SemigroupPair pair) {
    if (l < 0) return std::nullopt;
    const std::int64_t g = std::gcd(pair.a, pair.b);
    if (l % g != 0) return std::nullopt;
    const std::int64_t a = pair.a / g;
    const std::int64_t b = pair.b / g;
    const std::int64_t target = l / g;
    for (std::int64_t t = 0; t * b <= target; ++t) {
        const std::int64_t rest = target - t * b;
        if (rest % a == 0) return Representation{rest / a, t};
    }
    return std::nullopt;
}

inline bool is_member(std::int64_t l, SemigroupPair pair) { return membership(l, pair).has_value(); }

/// Largest integer outside aN + bN for coprime a, b >= 2, found by scanning
/// down from (a-1)(b-1), above which every integer is representable.
inline std::int64_t frobenius(SemigroupPair pair) {
    if (std::gcd(pair.a, pair.b) != 1) throw DomainError("frobenius: generators are not coprime");
    if (pair.a == 1 || pair.b == 1) throw DomainError("frobenius: a generator equal to 1 leaves no gaps");
    for (std::int64_t l = (pair.a - 1) * (pair.b - 1) - 1; l >= 0; --l)
        if (!is_member(l, pair)) return l;
    throw DomainError("frobenius: no gap found");
}

/// The classes d1*N + i*d2 for 0 <= i < d1 are pairwise disjoint exactly when
/// gcd(d1, d2) = 1.
inline bool residue_classes_disjoint(std::int64_t d1, std::int64_t d2) {
    if (d1 < 1 || d2 < 1) throw DomainError("residue classes need positive moduli");
    return std::gcd(d1, d2) == 1;
}

} // namespace tame
