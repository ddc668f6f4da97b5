#include "novikov/matrix.hpp"

#include "novikov/errors.hpp"

namespace nov {

Matrix Matrix::identity(size_t n, ExtExponent precision) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = NovikovScalar::one(precision);
    if (precision)
        for (auto& s : m.data_)
            if (s.is_exact_zero()) s = NovikovScalar::from_terms({}, precision);
    return m;
}

Vector Matrix::column(size_t j) const {
    Vector v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(size_t j, const Vector& v) {
    for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool Matrix::all_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

ExtExponent Matrix::min_valuation() const {
    ExtExponent best;
    for (const auto& s : data_) best = ext_min(best, s.valuation());
    return best;
}

ExtExponent Matrix::min_precision() const {
    ExtExponent best;
    for (const auto& s : data_) best = ext_min(best, s.precision());
    return best;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw AssertionFailure("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < b.cols_; ++j) {
            NovikovScalar acc;
            for (size_t k = 0; k < a.cols_; ++k) {
                const auto& x = a(i, k);
                const auto& y = b(k, j);
                if (x.is_exact_zero() || y.is_exact_zero()) continue;
                acc += x * y;
            }
            r(i, j) = std::move(acc);
        }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AssertionFailure("matrix sum shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
    if (m.cols() != v.size()) throw AssertionFailure("matrix-vector shape mismatch");
    Vector r(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        NovikovScalar acc;
        for (size_t k = 0; k < m.cols(); ++k) {
            if (m(i, k).is_exact_zero() || v[k].is_exact_zero()) continue;
            acc += m(i, k) * v[k];
        }
        r[i] = std::move(acc);
    }
    return r;
}

Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    size_t top = std::max(a.rows(), b.rows()), bottom = std::max(c.rows(), d.rows());
    size_t left = std::max(a.cols(), c.cols()), right = std::max(b.cols(), d.cols());
    Matrix r(top + bottom, left + right);
    auto put = [&](const Matrix& m, size_t i0, size_t j0) {
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) r(i0 + i, j0 + j) = m(i, j);
    };
    put(a, 0, 0);
    put(b, 0, left);
    put(c, top, 0);
    put(d, top, left);
    return r;
}

size_t residue_rank(const Matrix& m) {
    std::vector<std::vector<char>> a(m.rows(), std::vector<char>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).coefficient_at(0) ? 1 : 0;
    size_t rank = 0;
    for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        size_t piv = rank;
        while (piv < m.rows() && !a[piv][col]) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        for (size_t i = 0; i < m.rows(); ++i)
            if (i != rank && a[i][col])
                for (size_t j = col; j < m.cols(); ++j) a[i][j] ^= a[rank][j];
        ++rank;
    }
    return rank;
}

bool in_valuation_ring(const Matrix& m) {
    auto v = m.min_valuation();
    return !v || *v >= 0;
}

bool agree_below(const Matrix& a, const Matrix& b, const ExtExponent& p) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (!agree_below(a(i, j), b(i, j), p)) return false;
    return true;
}

} // namespace nov
