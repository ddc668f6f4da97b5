#pragma once

#include "novikov/barcode.hpp"

#include <string>
#include <vector>

namespace nov {

enum class Family { RPn, CPn, HPn, Sn };

Family parse_family(const std::string& name); // rpn, cpn, hpn, sn
std::string family_name(Family f);

// Truncated polynomial ring Lambda[a]/(a^{r+1} = q) with nu(q) = A_L.
// For the sphere r = 1 (a is the point class); otherwise r = n.
struct CrossRing {
    Family family = Family::Sn;
    int n = 1;
    int n_l = 0;        // dimension
    int big_n = 0;      // minimal Maslov number
    Exponent c;         // n_l / big_n
    Exponent a_l;       // 1/2
    Exponent kappa;     // a_l / big_n
    int degree = 0;     // r: the power basis is a^0, ..., a^r
    int point_power() const { return degree; }
    int basis_size() const { return degree + 1; }
};

CrossRing cross_ring(Family family, int n);

// Values c_j = l(a^j) on the power basis; l(q x) = l(x) - A_L.
struct SpectralFiltration {
    CrossRing ring;
    std::vector<Exponent> values;
    bool nonneg_mode = true;

    // l(a^j) for any j >= 0.
    Exponent level(long j) const;
};

// Spectral values of multiplication by a^k: sorted {l(a^j) - l(a^{j+k})}.
// NonFiltered in nonneg mode when a consecutive difference is negative.
LengthSpectrum mult_spectrum(const SpectralFiltration& f, int k);

// Same values from the generic decomposition of the multiplication matrix.
std::vector<Exponent> mult_spectrum_generic(const SpectralFiltration& f, int k);

struct RootBoundReport {
    int power = 0;                       // p with (a^p)^m = q^{pm/(r+1)}
    Exponent telescoped;                 // (mk / N_L) A_L
    std::vector<Exponent> sums;          // the telescoping sum for each basis vector
    std::vector<Exponent> spectrum;
    Exponent top, top_bound;             // beta_B and (mk/N_L) A_L
    size_t index = 0;                    // ceil(B/m)
    Exponent at_index, index_bound;      // beta_{ceil(B/m)} and (k/N_L) A_L
};

RootBoundReport check_root_of_unity_bounds(const SpectralFiltration& f, int m, int k);

// beta_1 of the point-class spectrum, checked against min_x l(x) - l([pt] x).
Exponent gamma_from_filtration(const SpectralFiltration& f);

struct CrossConstants {
    Exponent c, gamma_bound, beta_bound, big_c, s_star;
};

CrossConstants cross_constants(const CrossRing& ring);

// (sum c_j) / (1 - max c_j) * (A_L + beta); all Maslov numbers must agree.
Exponent product_bound(const std::vector<CrossRing>& rings, const Exponent& beta);

} // namespace nov
