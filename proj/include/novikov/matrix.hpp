#pragma once

#include "novikov/scalar.hpp"

#include <cstddef>
#include <vector>

namespace nov {

using Vector = std::vector<NovikovScalar>;

// Dense row-major matrix of Novikov scalars. Entry (i, j) is the coefficient
// of target basis vector i in the image of source basis vector j.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n, ExtExponent precision = std::nullopt);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    NovikovScalar& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const NovikovScalar& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Vector column(size_t j) const;
    void set_column(size_t j, const Vector& v);

    // Applies f to every entry.
    template <class F>
    Matrix map(F f) const {
        Matrix m(rows_, cols_);
        for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = f(data_[k]);
        return m;
    }
    Matrix truncated(const ExtExponent& p) const {
        return map([&](const NovikovScalar& s) { return s.truncated(p); });
    }

    bool all_zero() const; // no terms anywhere (below the entry precisions)
    // Smallest entry valuation; nullopt when all entries vanish.
    ExtExponent min_valuation() const;
    // Smallest entry precision; nullopt when everything is exact.
    ExtExponent min_precision() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<NovikovScalar> data_;
};

Vector mat_vec(const Matrix& m, const Vector& v);

// Block matrix [[a, b], [c, d]]; empty blocks are allowed.
Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

// Rank over F_2 of the residue matrix (coefficients at T^0). For a matrix
// over the valuation ring this is full exactly when the determinant is a unit.
size_t residue_rank(const Matrix& m);

// True when every entry has nonnegative valuation.
bool in_valuation_ring(const Matrix& m);

// Entrywise agreement below p.
bool agree_below(const Matrix& a, const Matrix& b, const ExtExponent& p);

} // namespace nov
