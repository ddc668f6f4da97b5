#include "novikov/complex.hpp"

#include "novikov/errors.hpp"

#include <algorithm>

namespace nov {

ValidationReport validate(const FilteredComplex& c) {
    ValidationReport rep;
    const size_t n = c.dim();
    if (c.d.rows() != n || c.d.cols() != n) throw ValidationError("differential shape does not match the generators");
    Matrix d2 = c.d * c.d;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!d2(i, j).is_zero()) {
                rep.square_zero = false;
                rep.square_witness.emplace_back(i, j);
            }
    for (size_t j = 0; j < n; ++j) {
        std::optional<Exponent> image;
        for (size_t i = 0; i < n; ++i) {
            auto nu = c.d(i, j).valuation();
            if (!nu) continue;
            Exponent a = c.space.filtration[i] - *nu;
            if (!image || a > *image) image = a;
            if (c.space.grading && (*c.space.grading)[i] != (*c.space.grading)[j] - 1)
                rep.grading_violations.emplace_back(i, j);
        }
        if (image && *image > c.space.filtration[j]) rep.filtration_violations.push_back(j);
        if (image && *image == c.space.filtration[j]) rep.non_strict.push_back(j);
    }
    if (rep.valid())
        for (const auto& b : barcode(c).null_pairs) rep.null_pair_births.push_back(b.birth);
    return rep;
}

void require_valid(const FilteredComplex& c) {
    auto rep = validate(c);
    auto name = [&](size_t k) { return c.space.names[k]; };
    if (!rep.square_zero) {
        auto [i, j] = rep.square_witness.front();
        throw ValidationError("d^2 != 0: coefficient of " + name(i) + " in d^2(" + name(j) + ")");
    }
    if (!rep.filtration_violations.empty())
        throw ValidationError("differential raises the filtration of " + name(rep.filtration_violations.front()));
    if (!rep.grading_violations.empty()) {
        auto [i, j] = rep.grading_violations.front();
        throw ValidationError("d(" + name(j) + ") has a component on " + name(i) + " of the wrong degree");
    }
}

BarcodeResult barcode(const FilteredComplex& c) {
    BarcodeResult res;
    UzResult uz = uz_reduce(orthonormal_matrix(c.d, c.space, c.space));
    res.band = uz.band;
    auto degree_of = [&](size_t k) -> std::optional<int> {
        if (!c.space.grading) return std::nullopt;
        return (*c.space.grading)[k];
    };
    for (const auto& p : uz.pairs) {
        Bar b;
        b.birth = leading_filtration(c.space, p.eta);
        b.length = p.beta;
        b.degree = degree_of(p.eta_index);
        if (p.beta == 0)
            res.null_pairs.push_back(b);
        else
            res.barcode.bars.push_back(b);
    }
    for (size_t k = 0; k < uz.xi.size(); ++k) {
        Bar b;
        b.birth = leading_filtration(c.space, uz.xi[k]);
        b.degree = degree_of(uz.xi_index[k]);
        res.barcode.bars.push_back(b);
    }
    res.barcode.normalize();
    return res;
}

Exponent boundary_depth(const FilteredComplex& c) {
    auto lengths = sorted_lengths(barcode(c).barcode);
    return lengths.empty() ? Exponent(0) : lengths.back();
}

FilteredComplex rescale(const FilteredComplex& c, const Exponent& s) {
    if (s <= 0) throw HypothesisFailure("rescale factor must be positive");
    FilteredComplex r;
    r.space = c.space.rescaled(s);
    r.d = c.d.map([&](const NovikovScalar& x) { return x.rescaled(s); });
    if (c.precision) r.precision = Exponent(*c.precision * s);
    return r;
}

std::vector<Exponent> snf_bar_values(const FilteredComplex& c) {
    return snf_spectral_values(orthonormal_matrix(c.d, c.space, c.space));
}

Homology induced_homology_filtration(const FilteredComplex& c) {
    Homology h;
    h.uz = uz_reduce(orthonormal_matrix(c.d, c.space, c.space));
    if (c.space.grading) h.space.grading.emplace();
    for (size_t k = 0; k < h.uz.xi.size(); ++k) {
        const Vector& xi = h.uz.xi[k];
        Exponent level = leading_filtration(c.space, xi);
        h.space.names.push_back("[" + c.space.names[h.uz.xi_index[k]] + "]");
        h.space.filtration.push_back(level);
        if (c.space.grading) h.space.grading->push_back((*c.space.grading)[h.uz.xi_index[k]]);
        // xi = sum mu_i T^{A_i} x_i, rescaled by T^{-level}.
        Vector declared(xi.size());
        for (size_t i = 0; i < xi.size(); ++i) declared[i] = xi[i].shifted(c.space.filtration[i] - level);
        h.cycles.push_back(std::move(declared));
    }
    return h;
}

void require_chain_map(const FilteredComplex& c, const Matrix& d_map, const FilteredComplex* target) {
    const FilteredComplex& t = target ? *target : c;
    if (d_map.rows() != t.dim() || d_map.cols() != c.dim())
        throw NotChainMap("map shape does not match the complexes");
    Matrix diff = t.d * d_map + d_map * c.d;
    for (size_t i = 0; i < diff.rows(); ++i)
        for (size_t j = 0; j < diff.cols(); ++j)
            if (!diff(i, j).is_zero())
                throw NotChainMap("Dd != dD at (" + t.space.names[i] + ", " + c.space.names[j] +
                                  "): " + format_scalar(diff(i, j)));
}

Exponent default_precision(const FilteredComplex& c, const Exponent& sigma) {
    return c.space.spread() + sigma + 1;
}

FilteredMap homology_matrix(const FilteredComplex& c, const Matrix& d_map, const FilteredComplex* target) {
    const FilteredComplex& t = target ? *target : c;
    require_chain_map(c, d_map, &t);
    Homology hs = induced_homology_filtration(c);
    Homology ht = target ? induced_homology_filtration(t) : hs;
    const size_t n = t.dim(), bs = hs.uz.xi.size(), bt = ht.uz.xi.size(), k = ht.uz.pairs.size();
    // Target basis {xi', eta', zeta'} in orthonormal coordinates.
    Matrix basis(n, n), rhs(n, bs);
    for (size_t j = 0; j < bt; ++j) basis.set_column(j, ht.uz.xi[j]);
    for (size_t j = 0; j < k; ++j) {
        basis.set_column(bt + j, ht.uz.pairs[j].eta);
        basis.set_column(bt + k + j, ht.uz.pairs[j].zeta);
    }
    Matrix dt = orthonormal_matrix(d_map, c.space, t.space);
    for (size_t j = 0; j < bs; ++j) rhs.set_column(j, mat_vec(dt, hs.uz.xi[j]));
    ExtExponent cap = t.precision ? t.precision : ExtExponent(default_precision(t));
    Matrix coords = solve_unimodular(basis, rhs, cap);
    Matrix p(bt, bs);
    for (size_t i = 0; i < bt; ++i)
        for (size_t j = 0; j < bs; ++j) p(i, j) = coords(i, j);
    // The orthonormal xi_j sits at level 0; the declared homology basis vector
    // T^{-level_j} xi_j sits at level_j.
    return FilteredMap{hs.space, ht.space, from_orthonormal(p, hs.space, ht.space)};
}

} // namespace nov
