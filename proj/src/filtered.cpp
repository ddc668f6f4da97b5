#include "novikov/filtered.hpp"

#include "novikov/errors.hpp"

#include <algorithm>

namespace nov {

Exponent FilteredSpace::spread() const {
    if (filtration.empty()) return 0;
    auto [lo, hi] = std::minmax_element(filtration.begin(), filtration.end());
    return *hi - *lo;
}

FilteredSpace FilteredSpace::rescaled(const Exponent& s) const {
    FilteredSpace r = *this;
    for (auto& a : r.filtration) a *= s;
    return r;
}

FilteredSpace direct_sum(const FilteredSpace& a, const FilteredSpace& b) {
    FilteredSpace r;
    r.names = a.names;
    r.names.insert(r.names.end(), b.names.begin(), b.names.end());
    r.filtration = a.filtration;
    r.filtration.insert(r.filtration.end(), b.filtration.begin(), b.filtration.end());
    if (a.grading && b.grading) {
        r.grading = *a.grading;
        r.grading->insert(r.grading->end(), b.grading->begin(), b.grading->end());
    }
    return r;
}

std::optional<Exponent> filtration_of(const FilteredSpace& space, const Vector& v) {
    std::optional<Exponent> best;
    for (size_t j = 0; j < v.size(); ++j) {
        auto nu = v[j].valuation();
        if (!nu) continue;
        Exponent a = space.filtration[j] - *nu;
        if (!best || a > *best) best = a;
    }
    return best;
}

std::vector<Exponent> orthonormalize(const FilteredSpace& space) { return space.filtration; }

Matrix orthonormal_matrix(const Matrix& m, const FilteredSpace& source, const FilteredSpace& target) {
    Matrix r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).shifted(source.filtration[j] - target.filtration[i]);
    return r;
}

Matrix from_orthonormal(const Matrix& m, const FilteredSpace& source, const FilteredSpace& target) {
    Matrix r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).shifted(target.filtration[i] - source.filtration[j]);
    return r;
}

ExtExponent filtration_shift(const FilteredMap& d) {
    return orthonormal_matrix(d.matrix, d.source, d.target).min_valuation();
}

namespace {

struct Pivot {
    size_t row, col;
    Exponent v;
};

// Minimal-valuation entry over the active rows/cols, lexicographic tie-break.
// Throws PrecisionExhausted when an active entry is known to less than the
// candidate valuation, so minimality would not be certified.
std::optional<Pivot> find_pivot(const Matrix& w, const std::vector<char>& rows,
                                const std::vector<char>& cols, bool off_diagonal) {
    std::optional<Pivot> best;
    ExtExponent floor_prec;
    for (size_t i = 0; i < w.rows(); ++i) {
        if (!rows[i]) continue;
        for (size_t j = 0; j < w.cols(); ++j) {
            if (!cols[j]) continue;
            const auto& s = w(i, j);
            floor_prec = ext_min(floor_prec, s.precision());
            if (s.is_zero() || (off_diagonal && i == j)) continue;
            if (!best || s.terms().front() < best->v) best = Pivot{i, j, s.terms().front()};
        }
    }
    if (best && floor_prec && *floor_prec <= best->v)
        throw PrecisionExhausted("pivot valuation " + format_rational(best->v) +
                                 " is not below the working precision " + format_rational(*floor_prec));
    return best;
}

ExtExponent active_band(const Matrix& w, const std::vector<char>& rows, const std::vector<char>& cols) {
    ExtExponent band;
    for (size_t i = 0; i < w.rows(); ++i)
        for (size_t j = 0; j < w.cols(); ++j)
            if (rows[i] && cols[j]) band = ext_min(band, w(i, j).precision());
    return band;
}

bool is_one(const NovikovScalar& s) { return s.terms().size() == 1 && s.terms().front() == 0; }

} // namespace

std::vector<Exponent> SnfResult::sorted_values() const {
    auto v = values;
    std::sort(v.begin(), v.end());
    return v;
}

SnfResult smith_normal_form(const Matrix& m) {
    const size_t R = m.rows(), C = m.cols();
    Matrix w = m, u = Matrix::identity(R), v = Matrix::identity(C);
    std::vector<char> rows(R, 1), cols(C, 1);
    SnfResult res;
    while (auto p = find_pivot(w, rows, cols, false)) {
        const size_t r = p->row, c = p->col;
        NovikovScalar unit = w(r, c).shifted(-p->v);
        bool plain = is_one(unit);
        // Clear column c with row operations: row_i <- unit*row_i + q*row_r.
        for (size_t i = 0; i < R; ++i) {
            if (i == r || !rows[i] || w(i, c).is_zero()) continue;
            NovikovScalar q = w(i, c).shifted(-p->v);
            for (size_t j = 0; j < C; ++j) {
                NovikovScalar t = plain ? w(i, j) : unit * w(i, j);
                if (!w(r, j).is_exact_zero()) t += q * w(r, j);
                w(i, j) = std::move(t);
            }
            for (size_t j = 0; j < R; ++j) {
                NovikovScalar t = plain ? u(i, j) : unit * u(i, j);
                if (!u(r, j).is_exact_zero()) t += q * u(r, j);
                u(i, j) = std::move(t);
            }
        }
        // Clear row r with column operations.
        for (size_t j = 0; j < C; ++j) {
            if (j == c || !cols[j] || w(r, j).is_zero()) continue;
            NovikovScalar q = w(r, j).shifted(-p->v);
            for (size_t i = 0; i < R; ++i) {
                NovikovScalar t = plain ? w(i, j) : unit * w(i, j);
                if (!w(i, c).is_exact_zero()) t += q * w(i, c);
                w(i, j) = std::move(t);
            }
            for (size_t i = 0; i < C; ++i) {
                NovikovScalar t = plain ? v(i, j) : unit * v(i, j);
                if (!v(i, c).is_exact_zero()) t += q * v(i, c);
                v(i, j) = std::move(t);
            }
        }
        rows[r] = cols[c] = 0;
        res.pivots.emplace_back(r, c);
        res.values.push_back(p->v);
    }
    res.band = active_band(w, rows, cols);

    // Permute pivots onto the diagonal.
    std::vector<size_t> row_order, col_order;
    for (auto [r, c] : res.pivots) {
        row_order.push_back(r);
        col_order.push_back(c);
    }
    for (size_t i = 0; i < R; ++i)
        if (rows[i]) row_order.push_back(i);
    for (size_t j = 0; j < C; ++j)
        if (cols[j]) col_order.push_back(j);
    res.u = Matrix(R, R);
    res.v = Matrix(C, C);
    res.diagonal = Matrix(R, C);
    for (size_t a = 0; a < R; ++a)
        for (size_t j = 0; j < R; ++j) res.u(a, j) = u(row_order[a], j);
    for (size_t i = 0; i < C; ++i)
        for (size_t b = 0; b < C; ++b) res.v(i, b) = v(i, col_order[b]);
    for (size_t a = 0; a < R; ++a)
        for (size_t b = 0; b < C; ++b) res.diagonal(a, b) = w(row_order[a], col_order[b]);
    return res;
}

SnfCertificate verify_snf(const Matrix& m, const SnfResult& r) {
    SnfCertificate cert;
    cert.entries_in_ring = in_valuation_ring(r.u) && in_valuation_ring(r.v);
    cert.unit_determinants = cert.entries_in_ring && residue_rank(r.u) == r.u.rows() &&
                             residue_rank(r.v) == r.v.rows();
    Matrix prod = r.u * m * r.v;
    bool diag = true;
    for (size_t i = 0; i < prod.rows() && diag; ++i)
        for (size_t j = 0; j < prod.cols() && diag; ++j) {
            const auto& s = prod(i, j);
            if (i == j && i < r.rank()) {
                diag = s.valuation() && *s.valuation() == r.values[i];
            } else {
                diag = s.is_zero();
            }
        }
    cert.product_diagonal = diag;
    return cert;
}

UzResult uz_reduce(const Matrix& d) {
    const size_t N = d.rows();
    if (d.cols() != N) throw AssertionFailure("differential must be square");
    Matrix m = d, basis = Matrix::identity(N);
    std::vector<char> active(N, 1);
    UzResult res;
    while (auto p = find_pivot(m, active, active, true)) {
        const size_t r = p->row, c = p->col;
        NovikovScalar unit = m(r, c).shifted(-p->v);
        bool plain = is_one(unit);
        UzPair pair;
        pair.zeta = basis.column(c);
        pair.eta.assign(N, NovikovScalar{});
        for (size_t i = 0; i < N; ++i) {
            if (!active[i] || m(i, c).is_zero()) continue;
            NovikovScalar coef = m(i, c).shifted(-p->v);
            for (size_t k = 0; k < N; ++k)
                if (!basis(k, i).is_exact_zero()) pair.eta[k] += coef * basis(k, i);
        }
        pair.zeta_index = c;
        pair.eta_index = r;
        pair.beta = p->v;
        // Complement: b_k <- unit*b_k + (m_rk / T^v) b_c for every other active k.
        for (size_t k = 0; k < N; ++k) {
            if (!active[k] || k == r || k == c) continue;
            bool has_q = !m(r, k).is_zero();
            if (plain && !has_q) continue;
            NovikovScalar q = has_q ? m(r, k).shifted(-p->v) : NovikovScalar{};
            for (size_t i = 0; i < N; ++i) {
                if (!active[i]) continue;
                NovikovScalar t = plain ? m(i, k) : unit * m(i, k);
                if (has_q && !m(i, c).is_exact_zero()) t += q * m(i, c);
                m(i, k) = std::move(t);
            }
            for (size_t i = 0; i < N; ++i) {
                NovikovScalar t = plain ? basis(i, k) : unit * basis(i, k);
                if (has_q && !basis(i, c).is_exact_zero()) t += q * basis(i, c);
                basis(i, k) = std::move(t);
            }
        }
        active[r] = active[c] = 0;
        res.pairs.push_back(std::move(pair));
    }
    // Whatever is left must be a zero block; a surviving diagonal entry means d^2 != 0.
    for (size_t i = 0; i < N; ++i)
        if (active[i] && !m(i, i).is_zero())
            throw AssertionFailure("differential does not square to zero below precision");
    res.band = active_band(m, active, active);
    for (size_t k = 0; k < N; ++k)
        if (active[k]) {
            res.xi.push_back(basis.column(k));
            res.xi_index.push_back(k);
        }
    return res;
}

std::vector<Exponent> SpectralValueDecomposition::values() const {
    std::vector<Exponent> v;
    for (const auto& p : coimage_pairs) v.push_back(p.beta);
    return v;
}

SpectralValueDecomposition uz_decompose_orthonormal(const Matrix& mat) {
    const size_t n = mat.cols(), m = mat.rows();
    Matrix k(n + m, n + m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) k(n + i, j) = mat(i, j);
    UzResult uz = uz_reduce(k);
    SpectralValueDecomposition out;
    out.band = uz.band;
    for (auto& p : uz.pairs) {
        CoimagePair cp;
        cp.source.assign(p.zeta.begin(), p.zeta.begin() + n);
        cp.target.assign(p.eta.begin() + n, p.eta.end());
        cp.beta = p.beta;
        out.coimage_pairs.push_back(std::move(cp));
    }
    std::stable_sort(out.coimage_pairs.begin(), out.coimage_pairs.end(),
                     [](const CoimagePair& a, const CoimagePair& b) { return a.beta < b.beta; });
    for (size_t t = 0; t < uz.xi.size(); ++t) {
        if (uz.xi_index[t] < n)
            out.kernel_basis.emplace_back(uz.xi[t].begin(), uz.xi[t].begin() + n);
        else
            out.cokernel_basis.emplace_back(uz.xi[t].begin() + n, uz.xi[t].end());
    }
    return out;
}

SpectralValueDecomposition uz_decompose(const FilteredMap& d) {
    auto shift = filtration_shift(d);
    if (shift && *shift < 0)
        throw NonFiltered("map raises filtration by " + format_rational(-*shift));
    return uz_decompose_orthonormal(orthonormal_matrix(d.matrix, d.source, d.target));
}

std::vector<Exponent> snf_spectral_values(const Matrix& orthonormal) {
    return smith_normal_form(orthonormal).sorted_values();
}

Matrix solve_unimodular(const Matrix& b, const Matrix& y, ExtExponent cap) {
    const size_t n = b.rows(), m = y.cols();
    if (b.cols() != n || y.rows() != n) throw AssertionFailure("solve: shape mismatch");
    Matrix a(n, n + m);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a(i, j) = b(i, j);
        for (size_t j = 0; j < m; ++j) a(i, n + j) = y(i, j);
    }
    std::vector<char> used(n, 0);
    std::vector<size_t> row_of(n);
    for (size_t j = 0; j < n; ++j) {
        size_t piv = n;
        for (size_t i = 0; i < n; ++i)
            if (!used[i] && a(i, j).valuation() && *a(i, j).valuation() == 0) {
                piv = i;
                break;
            }
        if (piv == n) throw AssertionFailure("solve: matrix is not unimodular over the valuation ring");
        used[piv] = 1;
        row_of[j] = piv;
        if (a(piv, j).terms().size() > 1) {
            NovikovScalar inv = invert_unit(a(piv, j), cap);
            for (size_t k = 0; k < n + m; ++k)
                if (!a(piv, k).is_exact_zero()) a(piv, k) = inv * a(piv, k);
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == piv || a(i, j).is_zero()) continue;
            NovikovScalar f = a(i, j);
            for (size_t k = 0; k < n + m; ++k)
                if (!a(piv, k).is_exact_zero()) a(i, k) += f * a(piv, k);
        }
    }
    Matrix x(n, m);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < m; ++k) x(j, k) = a(row_of[j], n + k);
    return x;
}

Vector solve_unimodular(const Matrix& b, const Vector& y, ExtExponent cap) {
    Matrix rhs(y.size(), 1);
    rhs.set_column(0, y);
    return solve_unimodular(b, rhs, cap).column(0);
}

Exponent leading_filtration(const FilteredSpace& space, const Vector& v) {
    std::optional<Exponent> low;
    for (const auto& s : v)
        if (auto nu = s.valuation(); nu && (!low || *nu < *low)) low = nu;
    if (!low) throw AssertionFailure("leading_filtration of a zero vector");
    std::optional<Exponent> best;
    for (size_t i = 0; i < v.size(); ++i)
        if (auto nu = v[i].valuation(); nu && *nu == *low)
            if (!best || space.filtration[i] > *best) best = space.filtration[i];
    return *best;
}

} // namespace nov
