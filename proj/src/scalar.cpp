#include "novikov/scalar.hpp"

#include "novikov/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

namespace nov {

namespace {

// Sorts and cancels repeated exponents in pairs.
void normalize_terms(std::vector<Exponent>& t) {
    std::sort(t.begin(), t.end());
    size_t out = 0;
    for (size_t i = 0; i < t.size();) {
        size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        if ((j - i) % 2 == 1) {
            if (out != i) t[out] = t[i];
            ++out;
        }
        i = j;
    }
    t.resize(out);
}

void drop_from(std::vector<Exponent>& t, const ExtExponent& p) {
    if (!p) return;
    auto it = std::lower_bound(t.begin(), t.end(), *p);
    t.erase(it, t.end());
}

} // namespace

NovikovScalar NovikovScalar::monomial(const Exponent& e, ExtExponent precision) {
    NovikovScalar s;
    s.prec_ = std::move(precision);
    if (!s.prec_ || e < *s.prec_) s.terms_.push_back(e);
    return s;
}

NovikovScalar NovikovScalar::from_terms(std::vector<Exponent> terms, ExtExponent precision) {
    NovikovScalar s;
    normalize_terms(terms);
    drop_from(terms, precision);
    s.terms_ = std::move(terms);
    s.prec_ = std::move(precision);
    return s;
}

bool NovikovScalar::coefficient_at(const Exponent& e) const {
    return std::binary_search(terms_.begin(), terms_.end(), e);
}

NovikovScalar NovikovScalar::shifted(const Exponent& lambda) const {
    NovikovScalar s = *this;
    for (auto& t : s.terms_) t += lambda;
    if (s.prec_) *s.prec_ += lambda;
    return s;
}

NovikovScalar NovikovScalar::rescaled(const Exponent& factor) const {
    NovikovScalar s = *this;
    for (auto& t : s.terms_) t *= factor;
    if (s.prec_) *s.prec_ *= factor;
    return s;
}

NovikovScalar NovikovScalar::truncated(const ExtExponent& p) const {
    NovikovScalar s = *this;
    s.prec_ = ext_min(prec_, p);
    drop_from(s.terms_, s.prec_);
    return s;
}

NovikovScalar NovikovScalar::squared() const {
    NovikovScalar s;
    // (x + e)^2 = x^2 + e^2, and nu(e^2) >= 2 * precision.
    if (prec_) s.prec_ = Exponent(2 * *prec_);
    s.terms_.reserve(terms_.size());
    for (const auto& t : terms_) s.terms_.push_back(2 * t);
    drop_from(s.terms_, s.prec_);
    return s;
}

NovikovScalar operator+(const NovikovScalar& x, const NovikovScalar& y) {
    NovikovScalar r;
    r.prec_ = ext_min(x.prec_, y.prec_);
    r.terms_.reserve(x.terms_.size() + y.terms_.size());
    // Merge of two sorted lists with mod-2 cancellation.
    auto i = x.terms_.begin(), j = y.terms_.begin();
    while (i != x.terms_.end() || j != y.terms_.end()) {
        if (j == y.terms_.end() || (i != x.terms_.end() && *i < *j)) {
            r.terms_.push_back(*i++);
        } else if (i == x.terms_.end() || *j < *i) {
            r.terms_.push_back(*j++);
        } else {
            ++i;
            ++j;
        }
    }
    drop_from(r.terms_, r.prec_);
    return r;
}

namespace {

// Terms over a common denominator as machine integers; false when they do not fit.
bool to_scaled(const std::vector<Exponent>& t, const mpz_class& den, std::vector<long>& out) {
    out.clear();
    out.reserve(t.size());
    mpz_class v;
    for (const auto& e : t) {
        v = e.get_num() * (den / e.get_den());
        if (!v.fits_slong_p() || abs(v) > (1L << 40)) return false;
        out.push_back(v.get_si());
    }
    return true;
}

// Products with a small common denominator avoid rational comparisons in the sort.
bool multiply_scaled(const NovikovScalar& x, const NovikovScalar& y, const ExtExponent& prec,
                     std::vector<Exponent>& result) {
    mpz_class den = 1;
    for (const auto* t : {&x.terms(), &y.terms()})
        for (const auto& e : *t) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.get_den().get_mpz_t());
            if (den > (1L << 20)) return false;
        }
    std::vector<long> a, b;
    if (!to_scaled(x.terms(), den, a) || !to_scaled(y.terms(), den, b)) return false;
    long cut = 0;
    if (prec) {
        mpz_class c = ceil_rational(*prec * den).get_num();
        if (!c.fits_slong_p() || abs(c) > (1L << 42)) return false;
        cut = c.get_si();
    }
    result.clear();
    const long lo = a.front() + b.front();
    long hi = a.back() + b.back();
    if (prec) hi = std::min(hi, cut - 1);
    if (hi < lo) return true;
    const unsigned long span = static_cast<unsigned long>(hi - lo) + 1;
    if (span / 64 <= 4 * a.size() * b.size() && span <= (1UL << 26)) {
        // Dense range: toggle parity bits instead of sorting the sums.
        std::vector<uint64_t> bits((span + 63) / 64);
        for (long u : a)
            for (long v : b) {
                const long w = u + v;
                if (w > hi) break;
                const unsigned long k = static_cast<unsigned long>(w - lo);
                bits[k >> 6] ^= uint64_t(1) << (k & 63);
            }
        for (size_t i = 0; i < bits.size(); ++i)
            for (uint64_t word = bits[i]; word; word &= word - 1) {
                Exponent e(mpz_class(lo + static_cast<long>(i * 64 + __builtin_ctzll(word))), den);
                e.canonicalize();
                result.push_back(std::move(e));
            }
        return true;
    }
    std::vector<long> sums;
    sums.reserve(a.size() * b.size());
    for (long u : a)
        for (long v : b) {
            if (u + v > hi) break;
            sums.push_back(u + v);
        }
    std::sort(sums.begin(), sums.end());
    for (size_t i = 0; i < sums.size();) {
        size_t j = i;
        while (j < sums.size() && sums[j] == sums[i]) ++j;
        if ((j - i) % 2 == 1) {
            Exponent e(mpz_class(sums[i]), den);
            e.canonicalize();
            result.push_back(std::move(e));
        }
        i = j;
    }
    return true;
}

} // namespace

NovikovScalar operator*(const NovikovScalar& x, const NovikovScalar& y) {
    NovikovScalar r;
    r.prec_ = ext_min(ext_add(x.prec_, y.valuation()), ext_add(y.prec_, x.valuation()));
    if (x.terms_.empty() || y.terms_.empty()) return r;
    if (x.terms_.size() == 1 && y.terms_.size() == 1) {
        Exponent s = x.terms_.front() + y.terms_.front();
        if (!r.prec_ || s < *r.prec_) r.terms_.push_back(std::move(s));
        return r;
    }
    if (multiply_scaled(x, y, r.prec_, r.terms_)) return r;
    std::vector<Exponent> sums;
    sums.reserve(x.terms_.size() * y.terms_.size());
    Exponent s;
    for (const auto& a : x.terms_) {
        for (const auto& b : y.terms_) {
            s = a + b;
            if (r.prec_ && s >= *r.prec_) break;
            sums.push_back(s);
        }
    }
    normalize_terms(sums);
    r.terms_ = std::move(sums);
    return r;
}

NovikovScalar add(const NovikovScalar& x, const NovikovScalar& y) { return x + y; }
NovikovScalar mul(const NovikovScalar& x, const NovikovScalar& y) { return x * y; }

NovikovScalar invert_unit(const NovikovScalar& x, ExtExponent cap) {
    auto v = x.valuation();
    if (!v || *v != 0)
        throw NotAUnit("valuation of " + format_scalar(x) + " is " + format_ext(v) + ", expected 0");
    if (x.terms().size() == 1) return NovikovScalar::one(x.precision());
    ExtExponent target = ext_min(x.precision(), cap);
    if (!target)
        throw PrecisionExhausted("inverse of the exact non-monomial unit " + format_scalar(x) +
                                 " needs a finite precision");
    const Exponent& p = *target;
    NovikovScalar xt = x.truncated(target);
    // u = x - 1 has nu(u) = first nonzero exponent; Newton step y <- x*y^2
    // doubles the number of correct orders.
    Exponent gain = xt.terms().size() > 1 ? xt.terms()[1] : p;
    NovikovScalar y = NovikovScalar::one(target);
    for (Exponent correct = gain; correct < p; correct *= 2)
        y = (xt * y.squared()).truncated(target);
    return NovikovScalar::from_terms(y.terms(), target);
}

NovikovScalar divide_in_ring(const NovikovScalar& x, const NovikovScalar& pivot, ExtExponent cap) {
    auto vp = pivot.valuation();
    if (!vp) throw ValuationOrder("division by a pivot with no terms below precision");
    auto vx = x.valuation();
    if (ext_less(vx, vp))
        throw ValuationOrder("nu(x) = " + format_ext(vx) + " < nu(pivot) = " + format_ext(vp));
    NovikovScalar w = pivot.shifted(-*vp);
    ExtExponent c = cap ? ExtExponent(*cap - *vp) : std::nullopt;
    if (!c && x.precision()) c = Exponent(*x.precision() - *vp);
    return x.shifted(-*vp) * invert_unit(w, c);
}

bool agree_below(const NovikovScalar& x, const NovikovScalar& y, const ExtExponent& p) {
    ExtExponent bound = ext_min(p, ext_min(x.precision(), y.precision()));
    return x.truncated(bound).terms() == y.truncated(bound).terms();
}

std::string format_term(const Exponent& e) { return format_rational(e); }

std::string format_scalar(const NovikovScalar& x) {
    if (x.terms().empty()) return "0";
    std::string out;
    for (const auto& t : x.terms()) {
        if (!out.empty()) out += " + ";
        std::string e = format_rational(t);
        if (t >= 0 && t.get_den() == 1)
            out += "T^" + e;
        else
            out += "T^{" + e + "}";
    }
    return out;
}

std::string NovikovScalar::to_string() const {
    std::string s = format_scalar(*this);
    if (prec_) s += " @" + format_rational(*prec_);
    return s;
}

NovikovScalar parse_scalar(const std::string& text, ExtExponent precision) {
    std::vector<Exponent> terms;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (text.substr(i) == "0") return NovikovScalar::from_terms({}, precision);
    while (i < text.size()) {
        skip();
        if (i < text.size() && text[i] == '1') {
            terms.push_back(0);
            ++i;
        } else if (i < text.size() && text[i] == 'T') {
            ++i;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                std::string lit;
                if (i < text.size() && text[i] == '{') {
                    auto close = text.find('}', i);
                    if (close == std::string::npos) throw FormatError("unclosed brace in '" + text + "'");
                    lit = text.substr(i + 1, close - i - 1);
                    i = close + 1;
                } else {
                    size_t j = i;
                    while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) ||
                                               text[j] == '-' || text[j] == '/'))
                        ++j;
                    lit = text.substr(i, j - i);
                    i = j;
                }
                terms.push_back(parse_rational(lit));
            } else {
                terms.push_back(1);
            }
        } else {
            throw FormatError("bad scalar '" + text + "' at offset " + std::to_string(i));
        }
        skip();
        if (i < text.size()) {
            if (text[i] != '+') throw FormatError("expected '+' in '" + text + "'");
            ++i;
        }
    }
    return NovikovScalar::from_terms(std::move(terms), precision);
}

} // namespace nov
