#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ppav/arith.hpp"

namespace ppav {

/// Dense row-major matrix with explicit dimensions.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows);

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    void set_row(std::size_t i, const std::vector<T>& v) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows)
        for (const auto& v : r) data_.push_back(v);
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

/// Integer echelon form of the row lattice: rows are nonzero, pivot columns
/// strictly increase, pivots positive, entries above each pivot reduced into
/// [0, pivot). Works for any rank; the result has rank() rows.
IntMatrix hnf_integer(IntMatrix m);

/// Canonical row-style Hermite normal form of the lattice generated by the
/// rows of `m`. The lattice must have full rank equal to the column count,
/// otherwise RankError. Two inputs generate the same lattice iff the outputs
/// are identical.
RatMatrix hnf(const RatMatrix& m);

/// Least common multiple of all entry denominators.
Integer common_denominator(const RatMatrix& m);

IntMatrix to_integer(const RatMatrix& m, const Integer& scale);
RatMatrix to_rational(const IntMatrix& m);

Rational determinant(RatMatrix m);
Integer determinant(const IntMatrix& m);

/// Inverse of a square nonsingular matrix; InternalError when singular.
RatMatrix inverse(RatMatrix m);

std::size_t rank(RatMatrix m);

/// Z-basis of {c in Z^rows : c * m = 0}, as rows, in echelon form.
IntMatrix integer_left_kernel(const IntMatrix& m);

/// Solve x * m = b for square nonsingular m.
std::vector<Rational> solve_left(const RatMatrix& m, const std::vector<Rational>& b);

}  // namespace ppav
