#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ecforge {

using Integer  = mpz_class;
using Rational = mpq_class;

// gmp keeps mpq_class canonical (gcd-reduced, positive denominator) through
// arithmetic; only direct num/den construction needs an explicit canonicalize.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

/// Parses "num" or "num/den" with an optional leading sign.
inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    auto as_int = [](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer literal");
        return Integer(std::string(s), 10);
    };
    if (slash == std::string_view::npos) return Rational(as_int(text));
    return make_rational(as_int(text.substr(0, slash)), as_int(text.substr(slash + 1)));
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::optional<Integer> integer_sqrt(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return r;
}

/// Nonnegative square root of q when q is the square of a rational.
/// Numerator and denominator are coprime, so each must be a square on its own.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    auto rn = integer_sqrt(q.get_num());
    if (!rn) return std::nullopt;
    auto rd = integer_sqrt(q.get_den());
    if (!rd) return std::nullopt;
    return Rational(std::move(*rn), std::move(*rd));
}

inline std::optional<Integer> integer_cbrt(const Integer& n) {
    Integer r, rem;
    mpz_rootrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), 3);
    if (rem != 0) return std::nullopt;
    return r;
}

inline std::optional<Rational> rational_cbrt(const Rational& q) {
    auto rn = integer_cbrt(q.get_num());
    if (!rn) return std::nullopt;
    auto rd = integer_cbrt(q.get_den());
    if (!rd) return std::nullopt;
    return Rational(std::move(*rn), std::move(*rd));
}

inline bool is_square(const Rational& q) { return rational_sqrt(q).has_value(); }

}  // namespace ecforge
