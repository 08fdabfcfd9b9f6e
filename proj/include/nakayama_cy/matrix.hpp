#pragma once

// Dense matrices and fraction-free Gauss-Jordan elimination.
//
// The elimination is the integer-preserving Gauss-Jordan scheme: at each
// pivot p every other row becomes (p * row - c * pivot_row) / p_prev, where
// p_prev is the previous pivot.  The division is exact, every entry stays a
// minor of the input, and at the end each pivot equals the same value D.
// Over Z this gives exact rational ranks and integral nullspace bases
// without fractions; over Z/p the same code is ordinary elimination.

#include <cassert>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace nakayama {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const T> values)
    {
        assert(values.size() == cols_);
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    template <class U>
    Matrix<U> cast() const
    {
        Matrix<U> out(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out(r, c) = U(static_cast<std::int64_t>((*this)(r, c)));
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    assert(a.cols() == b.rows());
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == T(0))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = out(i, j) + a(i, k) * b(k, j);
        }
    return out;
}

template <ExactScalar T>
struct Echelon {
    Matrix<T> reduced;                 ///< pivot rows first, each pivot equal to `pivot_value`
    std::vector<std::size_t> pivots;   ///< pivot column of row r
    T pivot_value = T(1);

    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Fraction-free Gauss-Jordan; consumes its argument.
template <ExactScalar T>
Echelon<T> fraction_free_reduce(Matrix<T> m)
{
    Echelon<T> out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    T prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(m(p, k), m(r, k));
        const T pivot = m(r, c);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            const T factor = m(i, c);
            for (std::size_t k = 0; k < cols; ++k)
                m(i, k) = exact_div(pivot * m(i, k) - factor * m(r, k), prev);
        }
        // earlier pivot rows now carry `pivot` in their pivot column too
        out.pivots.push_back(c);
        prev = pivot;
        ++r;
    }
    out.pivot_value = prev;
    out.reduced = std::move(m);
    return out;
}

template <ExactScalar T>
std::size_t rank(Matrix<T> m)
{
    return fraction_free_reduce(std::move(m)).rank();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <ExactScalar T>
std::vector<std::vector<T>> nullspace(Matrix<T> m)
{
    const std::size_t cols = m.cols();
    const Echelon<T> e = fraction_free_reduce(std::move(m));
    std::vector<char> is_pivot(cols, 0);
    for (auto c : e.pivots)
        is_pivot[c] = 1;

    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<T> v(cols, T(0));
        v[free] = e.pivot_value;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = T(0) - e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace nakayama
