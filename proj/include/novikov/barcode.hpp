#pragma once

#include "novikov/exponent.hpp"

#include <optional>
#include <vector>

namespace nov {

struct Bar {
    Exponent birth;
    ExtExponent length; // nullopt: infinite bar
    int multiplicity = 1;
    std::optional<int> degree;

    bool infinite() const { return !length.has_value(); }
    ExtExponent death() const { return length ? ExtExponent(birth + *length) : std::nullopt; }
};

bool operator<(const Bar& a, const Bar& b);

struct Barcode {
    std::vector<Bar> bars;

    // Merges equal bars into multiplicities and sorts.
    Barcode& normalize();
    size_t count() const;          // with multiplicity
    size_t finite_count() const;
    size_t infinite_count() const;
    Barcode shifted(const Exponent& c) const;
    Barcode rescaled(const Exponent& s) const;
    // One bar per unit of multiplicity.
    std::vector<Bar> expanded() const;
    // Bars of one degree (untagged bars are kept for nullopt).
    Barcode in_degree(std::optional<int> degree) const;
};

bool operator==(const Barcode& a, const Barcode& b);

// Sorted finite lengths together with the number of infinite bars.
struct LengthSpectrum {
    std::vector<Exponent> finite;
    size_t infinite = 0;
    friend bool operator==(const LengthSpectrum&, const LengthSpectrum&) = default;
};

LengthSpectrum length_spectrum(const Barcode& b);

// Sorted multiset of lengths; infinite lengths are omitted.
std::vector<Exponent> sorted_lengths(const Barcode& b);

} // namespace nov
