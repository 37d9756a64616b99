#pragma once

#include "integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace ogmon {

/// Dense row-major matrix over an exact ring (Integer or Rational).
template <class T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::initializer_list<std::initializer_list<long>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("ragged matrix literal");
            for (long x : row)
                data_.emplace_back(x);
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows)
    {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows)
                throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (x != 0)
                return false;
        return true;
    }

    bool is_identity() const
    {
        if (!is_square())
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0))
                    return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        T tmp;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj == 0)
                        continue;
                    tmp = aik * bkj;
                    c(i, j) += tmp;
                }
            }
        return c;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x)
    {
        if (a.cols_ != x.size())
            throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<T> y(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (x[j] != 0 && a(i, j) != 0)
                    y[i] += a(i, j) * x[j];
        return y;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix difference shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] -= b.data_[i];
        return a;
    }

    Matrix operator-() const
    {
        Matrix m = *this;
        for (auto& x : m.data_)
            x = -x;
        return m;
    }

    // Elementary operations used by the Smith normal form.
    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(i, c), (*this)(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap((*this)(r, i), (*this)(r, j));
    }

    /// row[dst] += factor * row[src]
    void add_row(std::size_t dst, std::size_t src, const T& factor)
    {
        if (factor == 0)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(src, c) != 0)
                (*this)(dst, c) += factor * (*this)(src, c);
    }

    /// col[dst] += factor * col[src]
    void add_col(std::size_t dst, std::size_t src, const T& factor)
    {
        if (factor == 0)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            if ((*this)(r, src) != 0)
                (*this)(r, dst) += factor * (*this)(r, src);
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            (*this)(i, c) = -(*this)(i, c);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

/// Converts a rational matrix with integral entries; nullopt-style failure via bool.
inline bool to_integer(const RatMatrix& m, IntMatrix& out)
{
    out = IntMatrix(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integral(m(i, j)))
                return false;
            out(i, j) = m(i, j).get_num();
        }
    return true;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot product length mismatch");
    T s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

} // namespace ogmon
