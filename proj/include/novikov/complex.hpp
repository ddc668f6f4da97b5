#pragma once

#include "novikov/barcode.hpp"
#include "novikov/filtered.hpp"

#include <string>
#include <vector>

namespace nov {

struct FilteredComplex {
    FilteredSpace space;
    Matrix d;                  // d(x_j) = sum_i d(i, j) x_i
    ExtExponent precision;     // declared working precision, if any

    size_t dim() const { return space.dim(); }
    FilteredMap as_map() const { return {space, space, d}; }
};

struct ValidationReport {
    bool square_zero = true;
    std::vector<std::pair<size_t, size_t>> square_witness; // entries of d^2 that survive
    std::vector<size_t> filtration_violations;              // generators with A(dx) > A(x)
    std::vector<size_t> non_strict;                         // generators with A(dx) = A(x)
    std::vector<std::pair<size_t, size_t>> grading_violations;
    std::vector<Exponent> null_pair_births;                 // zero-length pairs (only when valid)
    bool valid() const {
        return square_zero && filtration_violations.empty() && grading_violations.empty();
    }
};

ValidationReport validate(const FilteredComplex& c);
// Throws ValidationError naming the first violation.
void require_valid(const FilteredComplex& c);

struct BarcodeResult {
    Barcode barcode;        // positive-length and infinite bars, tagged by degree when graded
    std::vector<Bar> null_pairs; // zero-length pairs, excluded from the barcode
    ExtExponent band;       // exact below this value
    LengthSpectrum spectrum() const { return length_spectrum(barcode); }
};

BarcodeResult barcode(const FilteredComplex& c);
Exponent boundary_depth(const FilteredComplex& c);
FilteredComplex rescale(const FilteredComplex& c, const Exponent& s);

// Spectral values of the differential viewed as a map (greedy SNF); the
// positive ones are the finite bar lengths, the zeros are null pairs.
std::vector<Exponent> snf_bar_values(const FilteredComplex& c);

struct Homology {
    FilteredSpace space;         // basis [xi_j], with H(A)([xi_j]) = A(xi_j)
    std::vector<Vector> cycles;  // xi_j in the declared basis of C
    UzResult uz;                 // orthonormal-coordinate transcript
};

Homology induced_homology_filtration(const FilteredComplex& c);

// Checks D d = d D below precision; throws NotChainMap with a witness entry.
void require_chain_map(const FilteredComplex& c, const Matrix& d_map, const FilteredComplex* target = nullptr);

// Matrix of [D] in the orthogonal homology bases (target defaults to c).
FilteredMap homology_matrix(const FilteredComplex& c, const Matrix& d_map, const FilteredComplex* target = nullptr);

// A finite cut for inverse series when the data is exact.
Exponent default_precision(const FilteredComplex& c, const Exponent& sigma = 0);

} // namespace nov
