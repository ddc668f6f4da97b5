#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace nov {

// Exact rational exponent / action value.
using Exponent = mpq_class;

// An exponent or +infinity (nullopt). Used for precisions and valuations.
using ExtExponent = std::optional<Exponent>;

inline bool ext_less(const ExtExponent& a, const ExtExponent& b) {
    if (!a) return false;
    if (!b) return true;
    return *a < *b;
}
inline const ExtExponent& ext_min(const ExtExponent& a, const ExtExponent& b) {
    return ext_less(b, a) ? b : a;
}
inline ExtExponent ext_add(const ExtExponent& a, const ExtExponent& b) {
    if (!a || !b) return std::nullopt;
    return Exponent(*a + *b);
}

// num / den in lowest terms (den != 0).
inline Exponent ratio(long num, long den) {
    Exponent q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q", "-p/q" or an integer; throws FormatError otherwise.
Exponent parse_rational(const std::string& text);
// Canonical "p/q" or "p" form.
std::string format_rational(const Exponent& e);
std::string format_ext(const ExtExponent& e);

// Rounds up to an integer.
Exponent ceil_rational(const Exponent& e);
Exponent floor_rational(const Exponent& e);

} // namespace nov
