#pragma once

#include "novikov/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nov {

// Finite space with a declared orthogonal basis.
struct FilteredSpace {
    std::vector<std::string> names;
    std::vector<Exponent> filtration;
    std::optional<std::vector<int>> grading;

    size_t dim() const { return names.size(); }
    Exponent spread() const; // max - min of the basis filtrations, 0 if empty
    FilteredSpace rescaled(const Exponent& s) const;
};

// Direct sum; grading is kept only when both summands are graded.
FilteredSpace direct_sum(const FilteredSpace& a, const FilteredSpace& b);

// Matrix entry (i, j) is the target-i coefficient of D(source_j).
struct FilteredMap {
    FilteredSpace source;
    FilteredSpace target;
    Matrix matrix;
};

// Filtration of a coefficient vector; nullopt stands for -infinity (v = 0).
std::optional<Exponent> filtration_of(const FilteredSpace& space, const Vector& v);

// Exponents of the diagonal rescaling x_j -> T^{A(x_j)} x_j.
std::vector<Exponent> orthonormalize(const FilteredSpace& space);

// The matrix written in the orthonormal bases: entry d_ij T^{A(src_j) - A(tgt_i)}.
Matrix orthonormal_matrix(const Matrix& m, const FilteredSpace& source, const FilteredSpace& target);
// Inverse of orthonormal_matrix.
Matrix from_orthonormal(const Matrix& m, const FilteredSpace& source, const FilteredSpace& target);

// inf_v (A(v) - A(Dv)); nullopt is +infinity (D = 0).
ExtExponent filtration_shift(const FilteredMap& d);

// Greedy Smith normal form over the valuation ring. Pivot: minimal valuation,
// ties broken by the lexicographically smallest (row, col).
struct SnfResult {
    Matrix u, v;          // unimodular over the valuation ring
    Matrix diagonal;      // u * m * v, pivots at (k, k)
    std::vector<std::pair<size_t, size_t>> pivots; // positions in the input, elimination order
    std::vector<Exponent> values;                  // pivot valuations, elimination order
    ExtExponent band;     // results are certified exact below this value
    size_t rank() const { return pivots.size(); }
    std::vector<Exponent> sorted_values() const;
};
SnfResult smith_normal_form(const Matrix& m);

struct SnfCertificate {
    bool entries_in_ring = false;
    bool unit_determinants = false;
    bool product_diagonal = false;
    bool ok() const { return entries_in_ring && unit_determinants && product_diagonal; }
};
// Re-multiplies the transcript and checks the claims independently.
SnfCertificate verify_snf(const Matrix& m, const SnfResult& r);

// Orthogonalization of a complex given in orthonormal coordinates: returns a
// basis {xi, eta, zeta} (as coordinate vectors) with d zeta_k = T^{beta_k} u_k eta_k,
// u_k a unit, and d xi = d eta = 0.
struct UzPair {
    Vector zeta, eta;
    size_t zeta_index = 0, eta_index = 0; // generator slots the pair replaced
    Exponent beta;
};
struct UzResult {
    std::vector<UzPair> pairs;       // elimination order
    std::vector<Vector> xi;
    std::vector<size_t> xi_index;
    ExtExponent band;
};
UzResult uz_reduce(const Matrix& d);

struct CoimagePair {
    Vector source, target;
    Exponent beta;
};
struct SpectralValueDecomposition {
    std::vector<CoimagePair> coimage_pairs; // sorted by beta
    std::vector<Vector> kernel_basis;
    std::vector<Vector> cokernel_basis;
    ExtExponent band;
    std::vector<Exponent> values() const;
};
// Vectors are in the orthonormal coordinates of source / target.
SpectralValueDecomposition uz_decompose(const FilteredMap& d);
SpectralValueDecomposition uz_decompose_orthonormal(const Matrix& m);

// Sorted spectral values via the greedy SNF (second algorithm).
std::vector<Exponent> snf_spectral_values(const Matrix& orthonormal);

// Solves b * x = y for an invertible b over the valuation ring; the series for
// unit inverses are cut at `cap` when the data is exact.
Vector solve_unimodular(const Matrix& b, const Vector& y, ExtExponent cap = std::nullopt);
// Same with several right-hand sides (the columns of y).
Matrix solve_unimodular(const Matrix& b, const Matrix& y, ExtExponent cap = std::nullopt);

// Birth convention for a coordinate vector in orthonormal coordinates: the
// largest A(x_i) among the coordinates of minimal valuation.
Exponent leading_filtration(const FilteredSpace& space, const Vector& v);

} // namespace nov
