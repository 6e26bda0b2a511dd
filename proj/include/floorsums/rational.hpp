#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace floorsums {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Exact rational arithmetic is delegated to GMP. mpq_class keeps the
// invariants we rely on everywhere (denominator > 0, gcd(num, den) = 1)
// as long as values are built through the helpers below.
using Rational = mpq_class;

inline Rational make_rational(i64 num, i64 den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline Rational rational_from_u64(u64 num, u64 den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
    r.canonicalize();
    return r;
}

inline Rational rational_from_u64(u64 n) {
    return Rational(static_cast<unsigned long>(n));
}

// Parses "a/b" or "a". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

inline double rational_to_double(const Rational& r) {
    return r.get_d();
}

// Pairwise folding keeps intermediate numerators/denominators small until
// the top of the tree; a left fold over thousands of terms with pairwise
// coprime denominators would redo full-size gcd work at every step.
inline Rational balanced_rational_sum(std::vector<Rational> terms) {
    if (terms.empty()) return Rational(0);
    while (terms.size() > 1) {
        std::size_t half = (terms.size() + 1) / 2;
        for (std::size_t i = 0; i + half < terms.size(); ++i) terms[i] += terms[i + half];
        terms.resize(half);
    }
    return terms[0];
}

}  // namespace floorsums
