#include "conormal/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace conormal {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    // The right factor is often a sparse boundary matrix; walk its nonzeros.
    std::vector<std::vector<std::size_t>> nonzero(b.rows());
    for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(k, j) != 0) nonzero[k].push_back(j);

    IntMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j : nonzero[k]) p(i, j) += aik * b(k, j);
        }
    return p;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

std::size_t rational_rank(const IntMatrix& m) {
    // Exact Gaussian elimination over Q. Rows are held as primitive integer
    // vectors (any rational row rescales to one without changing the row
    // space); cross-multiplied updates followed by content division keep the
    // arithmetic exact. No Smith-normal-form machinery is involved.
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c);

    auto divide_by_content = [cols](std::vector<Int>& row) {
        Int g = 0;
        for (const Int& x : row) {
            g = gcd(g, x);
            if (g == 1) return;
        }
        if (g > 1)
            for (Int& x : row) x /= g;
    };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (a[r][col] != 0 && (pivot == rows || abs(a[r][col]) < abs(a[pivot][col]))) pivot = r;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);

        const std::vector<Int>& lead = a[rank];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            const Int scale = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] = a[r][c] * lead[col] - scale * lead[c];
            divide_by_content(a[r]);
        }
        ++rank;
    }
    return rank;
}

}  // namespace conormal
