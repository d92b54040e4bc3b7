#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace conormal {

/// Exact arbitrary-precision integer; intermediate coefficient growth never overflows.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense integer matrix. Sizes here are desk scale, so no sparse storage:
/// the reduction algorithms dominate the cost anyway.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntMatrix&) const = default;

    bool is_zero() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);

    IntMatrix transposed() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant of a square matrix, by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

/// Rank over Q by exact fraction-free elimination. Deliberately a separate
/// code path from the Smith normal form engine so the two can cross-check
/// each other.
std::size_t rational_rank(const IntMatrix& m);

}  // namespace conormal
