#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace tame {

/// Arbitrary-precision rational, always kept in lowest terms by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Total degree of a polynomial, with a distinguished value for the zero
/// polynomial that sits below every integer and absorbs addition.
class Degree {
public:
    constexpr Degree() = default;
    constexpr Degree(std::int64_t value) : value_(value) {}

    static constexpr Degree neg_infinity() { return Degree(kNegInf, Sentinel{}); }

    constexpr bool is_neg_infinity() const { return value_ == kNegInf; }

    /// Finite value; only meaningful when !is_neg_infinity().
    constexpr std::int64_t value() const { return value_; }

    friend constexpr auto operator<=>(Degree, Degree) = default;
    friend constexpr bool operator==(Degree, Degree) = default;

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (a.is_neg_infinity() || b.is_neg_infinity()) return neg_infinity();
        return Degree(a.value_ + b.value_);
    }

    std::string str() const { return is_neg_infinity() ? "-inf" : std::to_string(value_); }

    friend std::ostream& operator<<(std::ostream& os, Degree d) { return os << d.str(); }

private:
    struct Sentinel {};
    static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
    constexpr Degree(std::int64_t v, Sentinel) : value_(v) {}

    std::int64_t value_ = 0;
};

inline constexpr Degree kNegInfinity = Degree::neg_infinity();

} // namespace tame
