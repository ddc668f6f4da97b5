#pragma once

#include "novikov/cone.hpp"
#include "novikov/cross.hpp"
#include "novikov/persistence.hpp"

#include <cstdint>
#include <optional>

namespace nov {

struct InstanceOptions {
    size_t max_dim = 6;
    int max_denominator = 12;          // exponents are k/q with q drawn from [1, max_denominator]
    std::optional<DeformationCase> which; // drawn from the seed when unset
    Exponent sigma_factor = 1;         // sigma = factor * max suggest_sigma
    Exponent precision_factor = 1;     // scales the working precision (doubling tests)
    bool truncate = true;              // cut nonzero entries at the working precision
};

// Reproducible hypothesis-satisfying data for the deformation checks:
// (C, d0) and (C, d) with A(d - d0) >= a, chain maps D0 and D with
// A(D - D0) >= A, and a shift sigma above both separation thresholds.
// In Case 2 additionally dim H agrees and every bar of d is shorter than a.
struct RandomInstance {
    uint64_t seed = 0;
    DeformationCase which = DeformationCase::Low;
    FilteredComplex c0, c;
    Matrix map0, map;
    Exponent a, big_a, sigma;
    Exponent precision;
};

RandomInstance random_instance(uint64_t seed, const InstanceOptions& opt = {});

// Values on the power basis; in nonneg mode every consecutive difference,
// the wrap-around included, is nonnegative.
SpectralFiltration random_filtration(uint64_t seed, const CrossRing& ring, bool nonneg = true);

// Up to max_bars bars with small rational endpoints, some infinite.
Barcode random_barcode(uint64_t seed, size_t max_bars, bool allow_infinite = true);

// A window of 2N barcodes with A_M = 2 kappa N.
PeriodicBarcode random_periodic(uint64_t seed);

} // namespace nov
