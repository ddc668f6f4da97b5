#pragma once

#include "novikov/complex.hpp"

#include <array>
#include <string>
#include <vector>

namespace nov {

// Cone of T^sigma D : (C, d) -> (C', d') on C + C', filtration max, differential
// (c, c') -> (d c, T^sigma D c + d' c'). In characteristic 2 the sign of d drops.
struct ShiftedCone {
    FilteredComplex base;
    FilteredComplex target;
    Matrix map;
    Exponent sigma;
    FilteredComplex cone;
};

ShiftedCone build_cone(const FilteredComplex& c, const Matrix& d_map, const Exponent& sigma);
ShiftedCone build_cone(const FilteredComplex& c, const FilteredComplex& target, const Matrix& d_map,
                       const Exponent& sigma);

// spread(C) + boundary_depth(C) + 1.
Exponent suggest_sigma(const FilteredComplex& c, const Matrix& d_map);

struct SplitSpectrum {
    std::vector<Exponent> low;  // entries below sigma
    std::vector<Exponent> high; // entries at or above sigma
    size_t infinite = 0;
    Exponent sigma;
    size_t homology_rank = 0;   // rank of [D] on H(C, d)
    size_t homology_dim = 0;
};

// Partitions the cone spectrum at sigma and checks: low is the doubled spectrum
// of (C, d); high - sigma is the spectral-value multiset of [D] on H(C, d);
// the infinite count is 2 (B - rank [D]). SeparationFailure otherwise.
SplitSpectrum split_spectrum(const ShiftedCone& cone);

// Low spectrum only (values below sigma of the cone's finite spectrum).
std::vector<Exponent> low_part(const std::vector<Exponent>& spectrum, const Exponent& sigma);
std::vector<Exponent> high_part(const std::vector<Exponent>& spectrum, const Exponent& sigma);

struct DeformationBasicReport {
    ExtExponent perturbation_shift; // A(d - d0)
    std::vector<Exponent> below0, below; // finite spectra strictly below A
    size_t verified = 0;                  // common prefix length
};

// Spectra of (C, d0) and (C, d) strictly below A coincide when A(d - d0) >= A.
DeformationBasicReport check_deformation_basic(const FilteredComplex& c0, const FilteredComplex& c,
                                               const Exponent& bound);

enum class DeformationCase { Low = 1, High = 2 };

// Intermediate matrices of the Case-2 reduction of Cone(d0, T^sigma D0) written
// in the normal-form basis of (C, d), ordered (x', z', y', x, z, y): after the
// basis change, after clearing the y-rows / z-columns of the source summand,
// after clearing those of the target summand, and the final diagonal form.
struct CaseTwoTranscript {
    std::array<Matrix, 4> stages;
    std::vector<Exponent> values; // sorted spectral values of the final form
};

struct DeformationConeReport {
    DeformationCase which = DeformationCase::Low;
    size_t verified = 0;           // the hypothesis-determined index l
    std::vector<Exponent> low0, low, high0, high;
    ExtExponent d_shift, map_shift; // A(d - d0), A(D - D0)
    std::optional<CaseTwoTranscript> transcript;
};

DeformationConeReport check_deformation_cone(const FilteredComplex& c0, const FilteredComplex& c,
                                             const Matrix& map0, const Matrix& map,
                                             const Exponent& sigma, const Exponent& a, const Exponent& big_a,
                                             DeformationCase which);

// The reference Case-2 reduction (used by the checker as a cross-check).
CaseTwoTranscript case_two_transcript(const FilteredComplex& c0, const FilteredComplex& c, const Matrix& map0,
                                      const Exponent& sigma, const Exponent& a);

} // namespace nov
