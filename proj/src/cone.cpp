#include "novikov/cone.hpp"

#include "novikov/errors.hpp"

#include <algorithm>

namespace nov {

namespace {

std::string join(const std::vector<Exponent>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_rational(v[i]);
    return s + "}";
}

std::vector<Exponent> doubled(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
    std::vector<Exponent> r = a;
    r.insert(r.end(), b.begin(), b.end());
    std::sort(r.begin(), r.end());
    return r;
}

ExtExponent working_cap(const FilteredComplex& c, const Exponent& sigma = 0) {
    return c.precision ? c.precision : ExtExponent(default_precision(c, sigma));
}

Matrix difference(const Matrix& a, const Matrix& b) { return a + b; } // characteristic 2

bool prefix_equal(const std::vector<Exponent>& a, const std::vector<Exponent>& b, size_t l) {
    if (a.size() < l || b.size() < l) return false;
    return std::equal(a.begin(), a.begin() + l, b.begin());
}

// Spectral values (zeros included) of an orthonormal-coordinate matrix.
std::vector<Exponent> values_of(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return {};
    return snf_spectral_values(m);
}

} // namespace

ShiftedCone build_cone(const FilteredComplex& c, const FilteredComplex& target, const Matrix& d_map,
                       const Exponent& sigma) {
    if (sigma < 0) throw HypothesisFailure("cone shift must be nonnegative, got " + format_rational(sigma));
    require_chain_map(c, d_map, &target);
    ExtExponent shift = filtration_shift(FilteredMap{c.space, target.space, d_map});
    if (shift && *shift < 0)
        throw NonFiltered("map raises filtration by " + format_rational(-*shift));

    ShiftedCone sc{c, target, d_map, sigma, {}};
    FilteredSpace first = c.space, second = target.space;
    if (first.grading && second.grading)
        for (auto& g : *first.grading) ++g;
    for (auto& n : second.names) n += "'";
    sc.cone.space = direct_sum(first, second);
    Matrix shifted = d_map.map([&](const NovikovScalar& s) { return s.shifted(sigma); });
    sc.cone.d = block(c.d, Matrix(c.dim(), target.dim()), shifted, target.d);
    sc.cone.precision = ext_min(c.precision, target.precision);
    return sc;
}

ShiftedCone build_cone(const FilteredComplex& c, const Matrix& d_map, const Exponent& sigma) {
    return build_cone(c, c, d_map, sigma);
}

Exponent suggest_sigma(const FilteredComplex& c, const Matrix&) {
    return c.space.spread() + boundary_depth(c) + 1;
}

std::vector<Exponent> low_part(const std::vector<Exponent>& spectrum, const Exponent& sigma) {
    std::vector<Exponent> r;
    for (const auto& v : spectrum)
        if (v < sigma) r.push_back(v);
    return r;
}

std::vector<Exponent> high_part(const std::vector<Exponent>& spectrum, const Exponent& sigma) {
    std::vector<Exponent> r;
    for (const auto& v : spectrum)
        if (v >= sigma) r.push_back(v);
    return r;
}

SplitSpectrum split_spectrum(const ShiftedCone& sc) {
    SplitSpectrum s;
    s.sigma = sc.sigma;
    LengthSpectrum cone = barcode(sc.cone).spectrum();
    s.low = low_part(cone.finite, sc.sigma);
    s.high = high_part(cone.finite, sc.sigma);
    s.infinite = cone.infinite;

    LengthSpectrum base = barcode(sc.base).spectrum(), tgt = barcode(sc.target).spectrum();
    std::vector<Exponent> expect_low = doubled(base.finite, tgt.finite);
    if (s.low != expect_low)
        throw SeparationFailure("low part " + join(s.low) + " differs from the doubled spectrum " +
                                join(expect_low) + " at sigma " + format_rational(sc.sigma));

    FilteredMap p = homology_matrix(sc.base, sc.map, &sc.target);
    std::vector<Exponent> vals = values_of(orthonormal_matrix(p.matrix, p.source, p.target));
    s.homology_rank = vals.size();
    s.homology_dim = base.infinite;
    std::vector<Exponent> expect_high;
    for (const auto& v : vals) expect_high.push_back(v + sc.sigma);
    std::sort(expect_high.begin(), expect_high.end());
    if (s.high != expect_high)
        throw SeparationFailure("high part " + join(s.high) + " differs from sigma + spectral values of [D] " +
                                join(expect_high));
    size_t expect_inf = base.infinite + tgt.infinite - 2 * s.homology_rank;
    if (s.infinite != expect_inf)
        throw SeparationFailure("cone has " + std::to_string(s.infinite) + " infinite bars, expected " +
                                std::to_string(expect_inf));
    return s;
}

DeformationBasicReport check_deformation_basic(const FilteredComplex& c0, const FilteredComplex& c,
                                               const Exponent& bound) {
    if (c0.dim() != c.dim()) throw HypothesisFailure("complexes have different dimensions");
    DeformationBasicReport rep;
    Matrix m = difference(c.d, c0.d);
    rep.perturbation_shift = orthonormal_matrix(m, c.space, c.space).min_valuation();
    if (rep.perturbation_shift && *rep.perturbation_shift < bound)
        throw HypothesisFailure("A(M) = " + format_rational(*rep.perturbation_shift) + " is below A = " +
                                format_rational(bound));
    BarcodeResult b0 = barcode(c0), b = barcode(c);
    ExtExponent band = ext_min(b0.band, b.band);
    if (band && *band < bound)
        throw PrecisionExhausted("spectra are certified only below " + format_rational(*band) +
                                 ", but A = " + format_rational(bound));
    rep.below0 = low_part(b0.spectrum().finite, bound);
    rep.below = low_part(b.spectrum().finite, bound);
    if (rep.below0 != rep.below)
        throw AssertionFailure("spectra below " + format_rational(bound) + " differ: " + join(rep.below0) +
                               " vs " + join(rep.below));
    rep.verified = rep.below.size();
    return rep;
}

namespace {

// Clears row r and then column c of g around the pivot (r, c), which must have
// minimal valuation in both.
void clear_at(Matrix& g, size_t r, size_t c) {
    const auto& piv = g(r, c);
    if (piv.is_zero()) throw HypothesisFailure("reduction pivot vanishes");
    const Exponent v = *piv.valuation();
    for (size_t k = 0; k < g.cols(); ++k) {
        if (g(r, k).precision() && *g(r, k).precision() <= v)
            throw PrecisionExhausted("row entry not known up to the pivot valuation");
        if (!g(r, k).is_zero() && *g(r, k).valuation() < v)
            throw HypothesisFailure("pivot is not minimal in its row");
    }
    for (size_t i = 0; i < g.rows(); ++i) {
        if (g(i, c).precision() && *g(i, c).precision() <= v)
            throw PrecisionExhausted("column entry not known up to the pivot valuation");
        if (!g(i, c).is_zero() && *g(i, c).valuation() < v)
            throw HypothesisFailure("pivot is not minimal in its column");
    }
    const NovikovScalar unit = piv.shifted(-v);
    for (size_t k = 0; k < g.cols(); ++k) {
        if (k == c || g(r, k).is_zero()) continue;
        NovikovScalar q = g(r, k).shifted(-v);
        for (size_t i = 0; i < g.rows(); ++i) {
            NovikovScalar t = unit * g(i, k);
            if (!g(i, c).is_exact_zero()) t += q * g(i, c);
            g(i, k) = std::move(t);
        }
    }
    for (size_t i = 0; i < g.rows(); ++i) {
        if (i == r || g(i, c).is_zero()) continue;
        NovikovScalar q = g(i, c).shifted(-v);
        for (size_t k = 0; k < g.cols(); ++k) {
            NovikovScalar t = unit * g(i, k);
            if (!g(r, k).is_exact_zero()) t += q * g(r, k);
            g(i, k) = std::move(t);
        }
    }
}

} // namespace

CaseTwoTranscript case_two_transcript(const FilteredComplex& c0, const FilteredComplex& c, const Matrix& map0,
                                      const Exponent& sigma, const Exponent&) {
    const size_t n = c.dim();
    UzResult uz = uz_reduce(orthonormal_matrix(c.d, c.space, c.space));
    const size_t b = uz.xi.size(), k = uz.pairs.size();
    // Basis columns ordered (x, z, y).
    Matrix basis(n, n);
    for (size_t j = 0; j < b; ++j) basis.set_column(j, uz.xi[j]);
    for (size_t j = 0; j < k; ++j) {
        basis.set_column(b + j, uz.pairs[j].zeta);
        basis.set_column(b + k + j, uz.pairs[j].eta);
    }
    ExtExponent cap = working_cap(c, sigma);
    auto conjugate = [&](const Matrix& m) {
        return solve_unimodular(basis, orthonormal_matrix(m, c.space, c.space) * basis, cap);
    };
    Matrix d0e = conjugate(c0.d);
    Matrix de = conjugate(map0).map([&](const NovikovScalar& s) { return s.shifted(sigma); });

    CaseTwoTranscript tr;
    // Rows and columns: target summand (x', z', y') first, then the source (x, z, y).
    Matrix g = block(d0e, de, Matrix(n, n), d0e);
    tr.stages[0] = g;

    std::vector<char> row_done(2 * n, 0), col_done(2 * n, 0);
    auto reduce_summand = [&](size_t offset) {
        for (size_t j = 0; j < k; ++j) {
            size_t r = offset + b + k + j, col = offset + b + j;
            clear_at(g, r, col);
            row_done[r] = col_done[col] = 1;
            tr.values.push_back(*g(r, col).valuation());
        }
        // What is left of this summand's own differential vanishes when the
        // homology dimensions agree.
        for (size_t i = offset; i < offset + n; ++i)
            for (size_t j = offset; j < offset + n; ++j)
                if (!row_done[i] && !col_done[j] && !g(i, j).is_zero())
                    throw AssertionFailure("residual differential block does not vanish after the pivots");
    };
    reduce_summand(n);
    tr.stages[1] = g;
    reduce_summand(0);
    tr.stages[2] = g;

    // Remaining block: target rows (x', z') against source columns (x, y).
    std::vector<size_t> rr, cc;
    for (size_t i = 0; i < n; ++i)
        if (!row_done[i]) rr.push_back(i);
    for (size_t j = n; j < 2 * n; ++j)
        if (!col_done[j]) cc.push_back(j);
    Matrix rest(rr.size(), cc.size());
    for (size_t i = 0; i < rr.size(); ++i)
        for (size_t j = 0; j < cc.size(); ++j) rest(i, j) = g(rr[i], cc[j]);
    if (!rr.empty() && !cc.empty()) {
        SnfResult snf = smith_normal_form(rest);
        for (size_t i = 0; i < rr.size(); ++i)
            for (size_t j = 0; j < cc.size(); ++j) g(rr[i], cc[j]) = snf.diagonal(i, j);
        for (const auto& v : snf.values) tr.values.push_back(v);
    }
    tr.stages[3] = g;
    std::sort(tr.values.begin(), tr.values.end());
    return tr;
}

DeformationConeReport check_deformation_cone(const FilteredComplex& c0, const FilteredComplex& c,
                                             const Matrix& map0, const Matrix& map,
                                             const Exponent& sigma, const Exponent& a, const Exponent& big_a,
                                             DeformationCase which) {
    if (!(a > 0)) throw HypothesisFailure("a must be positive, got " + format_rational(a));
    if (!(big_a > a))
        throw HypothesisFailure("A = " + format_rational(big_a) + " must exceed a = " + format_rational(a));
    if (c0.dim() != c.dim()) throw HypothesisFailure("complexes have different dimensions");
    DeformationConeReport rep;
    rep.which = which;
    rep.d_shift = orthonormal_matrix(difference(c.d, c0.d), c.space, c.space).min_valuation();
    if (rep.d_shift && *rep.d_shift < a)
        throw HypothesisFailure("A(M') = " + format_rational(*rep.d_shift) + " is below a = " + format_rational(a));
    rep.map_shift = orthonormal_matrix(difference(map, map0), c.space, c.space).min_valuation();
    if (rep.map_shift && *rep.map_shift < big_a)
        throw HypothesisFailure("A(N') = " + format_rational(*rep.map_shift) + " is below A = " +
                                format_rational(big_a));
    Exponent need = std::max(suggest_sigma(c0, map0), suggest_sigma(c, map));
    if (sigma < need)
        throw HypothesisFailure("sigma = " + format_rational(sigma) + " is below the separation threshold " +
                                format_rational(need));

    SplitSpectrum s0 = split_spectrum(build_cone(c0, map0, sigma));
    SplitSpectrum s = split_spectrum(build_cone(c, map, sigma));
    rep.low0 = s0.low;
    rep.low = s.low;
    rep.high0 = s0.high;
    rep.high = s.high;

    if (which == DeformationCase::Low) {
        size_t l = 0;
        while (l < rep.low.size() && rep.low[l] < a) ++l;
        if (!prefix_equal(rep.low0, rep.low, l))
            throw AssertionFailure("low spectra differ within the first " + std::to_string(l) + " entries: " +
                                   join(rep.low0) + " vs " + join(rep.low));
        rep.verified = l;
        return rep;
    }

    if (s0.homology_dim != s.homology_dim)
        throw HypothesisFailure("dim H differs: " + std::to_string(s0.homology_dim) + " vs " +
                                std::to_string(s.homology_dim));
    if (!rep.low.empty() && rep.low.back() >= a)
        throw HypothesisFailure("largest low entry " + format_rational(rep.low.back()) + " is not below a = " +
                                format_rational(a));
    size_t l = 0;
    while (l < rep.high.size() && rep.high[l] < sigma + big_a - a) ++l;
    if (!prefix_equal(rep.high0, rep.high, l))
        throw AssertionFailure("high spectra differ within the first " + std::to_string(l) + " entries: " +
                               join(rep.high0) + " vs " + join(rep.high));
    rep.verified = l;

    CaseTwoTranscript tr = case_two_transcript(c0, c, map0, sigma, a);
    std::vector<Exponent> direct = doubled(rep.low0, rep.high0), positive;
    for (const auto& v : tr.values)
        if (v > 0) positive.push_back(v);
    if (positive != direct)
        throw AssertionFailure("block reduction gives " + join(positive) + " but the cone spectrum is " +
                               join(direct));
    rep.transcript = std::move(tr);
    return rep;
}

} // namespace nov
