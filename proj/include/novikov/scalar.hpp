#pragma once

#include "novikov/exponent.hpp"

#include <string>
#include <vector>

namespace nov {

// Element of the universal Novikov field over F_2, truncated at a precision.
// Presence of an exponent in terms() means coefficient 1. Everything at
// exponents >= precision() is unknown; a precision of nullopt means exact.
class NovikovScalar {
public:
    NovikovScalar() = default; // exact zero

    static NovikovScalar zero() { return {}; }
    static NovikovScalar monomial(const Exponent& e, ExtExponent precision = std::nullopt);
    static NovikovScalar one(ExtExponent precision = std::nullopt) { return monomial(0, std::move(precision)); }
    // Terms may be unsorted and contain repeats; repeats cancel in pairs.
    static NovikovScalar from_terms(std::vector<Exponent> terms, ExtExponent precision = std::nullopt);

    const std::vector<Exponent>& terms() const { return terms_; }
    const ExtExponent& precision() const { return prec_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_exact_zero() const { return terms_.empty() && !prec_; }
    ExtExponent valuation() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.front();
    }
    // Coefficient of T^0 (the residue in F_2 for elements of the valuation ring).
    bool coefficient_at(const Exponent& e) const;

    // Multiplication by T^lambda; exact.
    NovikovScalar shifted(const Exponent& lambda) const;
    // Multiplies every exponent (and the precision) by s > 0.
    NovikovScalar rescaled(const Exponent& s) const;
    // Drops terms >= p and lowers the precision to min(precision, p).
    NovikovScalar truncated(const ExtExponent& p) const;
    // Squaring is the Frobenius map in characteristic 2.
    NovikovScalar squared() const;

    friend NovikovScalar operator+(const NovikovScalar& x, const NovikovScalar& y);
    friend NovikovScalar operator*(const NovikovScalar& x, const NovikovScalar& y);
    NovikovScalar& operator+=(const NovikovScalar& y) { return *this = *this + y; }
    NovikovScalar& operator*=(const NovikovScalar& y) { return *this = *this * y; }
    friend bool operator==(const NovikovScalar& x, const NovikovScalar& y) {
        return x.prec_ == y.prec_ && x.terms_ == y.terms_;
    }

    std::string to_string() const;

private:
    std::vector<Exponent> terms_;
    ExtExponent prec_;
};

NovikovScalar add(const NovikovScalar& x, const NovikovScalar& y);
NovikovScalar mul(const NovikovScalar& x, const NovikovScalar& y);

// 1/x for nu(x) = 0. When x carries no finite precision and is not 1, the
// series is cut at `cap`; without a cap that is PrecisionExhausted.
NovikovScalar invert_unit(const NovikovScalar& x, ExtExponent cap = std::nullopt);

// q with x = q * pivot, for nu(x) >= nu(pivot).
NovikovScalar divide_in_ring(const NovikovScalar& x, const NovikovScalar& pivot,
                             ExtExponent cap = std::nullopt);

// True when x and y have the same terms below p (p limited by both precisions).
bool agree_below(const NovikovScalar& x, const NovikovScalar& y, const ExtExponent& p);

// Text form "T^0 + T^{3/2}", "0" for the empty sum.
std::string format_scalar(const NovikovScalar& x);
NovikovScalar parse_scalar(const std::string& text, ExtExponent precision = std::nullopt);
// Exponent literal for the documents: "3/2", "0", "-1".
std::string format_term(const Exponent& e);

} // namespace nov
