#pragma once

#include "novikov/barcode.hpp"

#include <utility>
#include <vector>

namespace nov {

// Indices refer to the expanded bar lists (one entry per unit of multiplicity).
struct Matching {
    std::vector<std::pair<size_t, size_t>> pairs;
    std::vector<size_t> unmatched1, unmatched2;
    ExtExponent delta; // nullopt: no matching exists (infinite-bar counts differ)
};

// Cost of matching two bars; nullopt when one is finite and the other is not.
ExtExponent match_cost(const Bar& a, const Bar& b);
// Cost of leaving a bar unmatched: half its length (+inf for infinite bars).
ExtExponent deletion_cost(const Bar& a);

// True when m is a delta-matching of the two expanded lists.
bool is_delta_matching(const std::vector<Bar>& b1, const std::vector<Bar>& b2, const Matching& m,
                       const Exponent& delta);

struct BottleneckResult {
    ExtExponent distance; // nullopt: +infinity
    Matching matching;
};

BottleneckResult bottleneck(const Barcode& b1, const Barcode& b2);

struct ShiftResult {
    ExtExponent distance;
    Exponent shift;        // b2 is shifted by this amount
    Matching matching;
    size_t candidates = 0;
};

// inf over c of bottleneck(b1, b2[c]), searched over endpoint differences and
// midpoints of pairs of differences.
ShiftResult bottleneck_mod_shift(const Barcode& b1, const Barcode& b2);

// Validation mode: minimum over the grid lo + k (hi - lo) / steps, k = 0..steps.
ShiftResult bottleneck_mod_shift_grid(const Barcode& b1, const Barcode& b2, const Exponent& lo,
                                      const Exponent& hi, size_t steps);

// Lengths with multiplicity, sorted; infinite lengths (nullopt) last.
std::vector<ExtExponent> length_multiset(const Barcode& b);

struct PeriodicBarcode {
    std::vector<Barcode> window; // B_k for k in [0, period_index)
    Exponent period_action;      // A_M; B_{r - period_index} = B_r shifted by -A_M
    size_t period_index = 0;     // 2 N_M
    Exponent kappa;              // A_M = kappa * period_index
};

// Union of the window barcodes, B_k shifted by -k kappa.
Barcode assemble_window(const PeriodicBarcode& p);

struct EndpointReport {
    size_t total = 0;          // endpoints of the assembled barcode
    size_t in_window = 0;      // endpoints of B_Z lying in [0, A_M)
    size_t lower_reps_upper = 0; // X+(B-): upper ends of bars whose lower end is in the window
    size_t lower_reps_lower = 0; // X-(B-)
    size_t upper_reps_upper = 0; // X+(B+)
    size_t upper_reps_lower = 0; // X-(B+): lower ends of bars whose upper end is in the window
    size_t leaving = 0;          // X+(B- minus B+)
    size_t entering = 0;         // X-(B+ minus B-)
    size_t long_orbits = 0;      // finite bars of length >= A_M, one per Z-orbit
};

// Throws AssertionFailure when the counts disagree.
EndpointReport lsv_endpoint_count(const PeriodicBarcode& p);

} // namespace nov
