#pragma once

// Classification of degree triples as multidegrees of tame automorphisms of
// affine 3-space.
//
// Sufficient conditions (realizability) are checked first, each producing a
// verified witness word where one is available. Two exclusion theorems
// follow, for d1 <= d2 <= d3 with d1 >= 3:
//   - d2 prime and d1 / gcd(d1, d3) != 2: tame iff d1 = d2 or
//     d3 in d1 N + d2 N;
//   - d3 prime and gcd(d1, d2) = 1: tame iff d3 in d1 N + d2 N.
// Triples outside both hypotheses stay Unknown.

#include <tame/autos.hpp>
#include <tame/numsemi.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace tame {

struct DegreeTriple {
    std::int64_t d1 = 0;
    std::int64_t d2 = 0;
    std::int64_t d3 = 0;

    friend bool operator==(const DegreeTriple&, const DegreeTriple&) = default;
};

/// Sorted triple plus the permutation that restores the input order:
/// input[i] == sorted[order[i]].
struct NormalizedTriple {
    DegreeTriple triple;
    std::array<std::size_t, 3> order{0, 1, 2};
};

inline NormalizedTriple normalize(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 1 || b < 1 || c < 1) throw DomainError("degrees must be positive integers");
    std::array<std::int64_t, 3> in{a, b, c};
    std::array<std::size_t, 3> idx{0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(), [&](auto i, auto j) { return in[i] < in[j]; });
    NormalizedTriple out;
    out.triple = {in[idx[0]], in[idx[1]], in[idx[2]]};
    for (std::size_t pos = 0; pos < 3; ++pos) out.order[idx[pos]] = pos;
    return out;
}

enum class Verdict { Tame, NotTame, Unknown };

enum class Reason {
    TrivialSmallDegree,
    EqualFirstPair,
    SemigroupMember,
    KnownInstance,
    Theorem3Exclusion,
    Theorem4Exclusion,
    HypothesesFail,
};

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Tame: return "Tame";
    case Verdict::NotTame: return "NotTame";
    case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

inline const char* to_string(Reason r) {
    switch (r) {
    case Reason::TrivialSmallDegree: return "TrivialSmallDegree";
    case Reason::EqualFirstPair: return "EqualFirstPair";
    case Reason::SemigroupMember: return "SemigroupMember";
    case Reason::KnownInstance: return "KnownInstance";
    case Reason::Theorem3Exclusion: return "Theorem3Exclusion";
    case Reason::Theorem4Exclusion: return "Theorem4Exclusion";
    case Reason::HypothesesFail: return "HypothesesFail";
    }
    return "?";
}

struct Decision {
    DegreeTriple triple;
    Verdict verdict = Verdict::Unknown;
    Reason reason = Reason::HypothesesFail;
    std::optional<TameWord> witness;
    std::optional<Representation> representation;
    /// Unmet hypotheses, filled for Unknown verdicts.
    std::vector<std::string> failed_hypotheses;
};

/// Deterministic trial division.
inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Multidegrees with no semigroup or equal-pair explanation that are known
/// to be realizable.
inline const std::array<DegreeTriple, 2>& known_instances() {
    static const std::array<DegreeTriple, 2> catalog{DegreeTriple{10, 23, 25}, DegreeTriple{22, 47, 55}};
    return catalog;
}

inline bool theorem3_hypotheses(const DegreeTriple& t) {
    return t.d1 >= 3 && is_prime(t.d2) && t.d1 / std::gcd(t.d1, t.d3) != 2;
}

inline bool theorem4_hypotheses(const DegreeTriple& t) {
    return t.d1 >= 3 && is_prime(t.d3) && std::gcd(t.d1, t.d2) == 1;
}

inline Decision decide(const DegreeTriple& t) {
    if (t.d1 < 1 || t.d1 > t.d2 || t.d2 > t.d3)
        throw DomainError("decide expects a sorted triple of positive integers");
    Decision out;
    out.triple = t;

    if (t.d1 < 3) {
        out.verdict = Verdict::Tame;
        out.reason = Reason::TrivialSmallDegree;
        if (t.d1 == 1) out.witness = witness_linear_first(t.d2, t.d3);
        return out;
    }
    if (auto rep = membership(t.d3, {t.d1, t.d2})) {
        out.verdict = Verdict::Tame;
        out.reason = Reason::SemigroupMember;
        out.representation = rep;
        out.witness = witness_semigroup(t.d1, t.d2, *rep);
        return out;
    }
    if (t.d1 == t.d2) {
        out.verdict = Verdict::Tame;
        out.reason = Reason::EqualFirstPair;
        out.witness = witness_equal_pair(t.d1, t.d3);
        return out;
    }
    for (const auto& known : known_instances()) {
        if (known == t) {
            out.verdict = Verdict::Tame;
            out.reason = Reason::KnownInstance;
            if (t == known_instances()[0]) out.witness = example_word();
            return out;
        }
    }
    if (theorem3_hypotheses(t)) {
        out.verdict = Verdict::NotTame;
        out.reason = Reason::Theorem3Exclusion;
        return out;
    }
    if (theorem4_hypotheses(t)) {
        out.verdict = Verdict::NotTame;
        out.reason = Reason::Theorem4Exclusion;
        return out;
    }

    out.verdict = Verdict::Unknown;
    out.reason = Reason::HypothesesFail;
    if (!is_prime(t.d2)) out.failed_hypotheses.push_back("d2 is not prime");
    if (t.d1 / std::gcd(t.d1, t.d3) == 2) out.failed_hypotheses.push_back("d1/gcd(d1,d3) = 2");
    if (!is_prime(t.d3)) out.failed_hypotheses.push_back("d3 is not prime");
    if (std::gcd(t.d1, t.d2) != 1) out.failed_hypotheses.push_back("gcd(d1,d2) != 1");
    return out;
}

/// Appends the permutation that reorders a witness for the sorted triple to
/// the original input order.
inline TameWord reorder_witness(const TameWord& w, const NormalizedTriple& n) {
    TameWord out = w;
    if (n.order != std::array<std::size_t, 3>{0, 1, 2})
        out.push_back(Permutation({n.order[0], n.order[1], n.order[2]}));
    return out;
}

enum class TypeThreeFamily { First, Second };

/// n with n < d1 <= 3n/2, d2 = 2n, d3 = 3n (First), or d1 = 3n/2, d2 = 2n,
/// 5n/2 < d3 <= 3n (Second). The exclusion theorems rely on these never
/// holding under their hypotheses.
struct TypeThreeHit {
    std::int64_t n = 0;
    TypeThreeFamily family = TypeThreeFamily::First;
};

inline std::optional<TypeThreeHit> type_iii_constraints(const DegreeTriple& t) {
    if (t.d2 % 2 != 0) return std::nullopt;
    const std::int64_t n = t.d2 / 2;
    if (n < t.d1 && 2 * t.d1 <= 3 * n && t.d3 == 3 * n) return TypeThreeHit{n, TypeThreeFamily::First};
    if (2 * t.d1 == 3 * n && 5 * n < 2 * t.d3 && t.d3 <= 3 * n)
        return TypeThreeHit{n, TypeThreeFamily::Second};
    return std::nullopt;
}

/// All sorted triples 1 <= d1 <= d2 <= d3 <= max_degree, ordered by
/// (d3, d2, d1).
inline std::vector<DegreeTriple> sorted_triples(std::int64_t max_degree) {
    std::vector<DegreeTriple> out;
    for (std::int64_t d3 = 1; d3 <= max_degree; ++d3)
        for (std::int64_t d2 = 1; d2 <= d3; ++d2)
            for (std::int64_t d1 = 1; d1 <= d2; ++d1) out.push_back({d1, d2, d3});
    return out;
}

inline std::size_t default_scan_threads() {
    if (const char* env = std::getenv("TAME_MDEG_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Decisions for every sorted triple up to max_degree, in (d3, d2, d1) order
/// regardless of the thread count.
inline std::vector<Decision> scan(std::int64_t max_degree, std::size_t threads = default_scan_threads()) {
    if (max_degree < 3) throw DomainError("scan needs max_degree >= 3");
    const auto triples = sorted_triples(max_degree);
    std::vector<Decision> out(triples.size());
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, triples.size()));
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < triples.size(); i += threads) out[i] = decide(triples[i]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace tame
