#include "novikov/barcode.hpp"

#include <algorithm>
#include <tuple>

namespace nov {

namespace {

// Finite lengths first, then infinity.
bool length_less(const ExtExponent& a, const ExtExponent& b) { return ext_less(a, b); }

bool same_bar(const Bar& a, const Bar& b) {
    return a.degree == b.degree && a.birth == b.birth && a.length == b.length;
}

} // namespace

bool operator<(const Bar& a, const Bar& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.length != b.length) return length_less(a.length, b.length);
    return a.multiplicity < b.multiplicity;
}

Barcode& Barcode::normalize() {
    std::sort(bars.begin(), bars.end());
    std::vector<Bar> merged;
    for (const auto& b : bars) {
        if (b.multiplicity <= 0) continue;
        if (!merged.empty() && same_bar(merged.back(), b))
            merged.back().multiplicity += b.multiplicity;
        else
            merged.push_back(b);
    }
    bars = std::move(merged);
    return *this;
}

size_t Barcode::count() const {
    size_t n = 0;
    for (const auto& b : bars) n += b.multiplicity;
    return n;
}

size_t Barcode::finite_count() const {
    size_t n = 0;
    for (const auto& b : bars)
        if (!b.infinite()) n += b.multiplicity;
    return n;
}

size_t Barcode::infinite_count() const { return count() - finite_count(); }

Barcode Barcode::shifted(const Exponent& c) const {
    Barcode r = *this;
    for (auto& b : r.bars) b.birth += c;
    return r;
}

Barcode Barcode::rescaled(const Exponent& s) const {
    Barcode r = *this;
    for (auto& b : r.bars) {
        b.birth *= s;
        if (b.length) *b.length *= s;
    }
    return r;
}

std::vector<Bar> Barcode::expanded() const {
    std::vector<Bar> out;
    for (const auto& b : bars)
        for (int k = 0; k < b.multiplicity; ++k) {
            Bar one = b;
            one.multiplicity = 1;
            out.push_back(one);
        }
    return out;
}

Barcode Barcode::in_degree(std::optional<int> degree) const {
    Barcode r;
    for (const auto& b : bars)
        if (b.degree == degree) r.bars.push_back(b);
    return r;
}

bool operator==(const Barcode& a, const Barcode& b) {
    Barcode x = a, y = b;
    x.normalize();
    y.normalize();
    if (x.bars.size() != y.bars.size()) return false;
    for (size_t i = 0; i < x.bars.size(); ++i)
        if (!same_bar(x.bars[i], y.bars[i]) || x.bars[i].multiplicity != y.bars[i].multiplicity)
            return false;
    return true;
}

LengthSpectrum length_spectrum(const Barcode& b) {
    LengthSpectrum s;
    s.finite = sorted_lengths(b);
    s.infinite = b.infinite_count();
    return s;
}

std::vector<Exponent> sorted_lengths(const Barcode& b) {
    std::vector<Exponent> out;
    for (const auto& bar : b.bars)
        if (bar.length)
            for (int k = 0; k < bar.multiplicity; ++k) out.push_back(*bar.length);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace nov
