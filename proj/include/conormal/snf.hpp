#pragma once

#include "conormal/matrix.hpp"

namespace conormal {

/// Unimodular factorization u * M * v = diag(d_1, ..., d_r, 0, ...) with
/// d_1 | d_2 | ... | d_r and all d_k >= 1. The inverse transforms are tracked
/// alongside, so kernels and preimages come out without a second elimination.
struct SmithDecomposition {
    IntMatrix u;      // rows side, |det| = 1
    IntMatrix v;      // columns side, |det| = 1
    IntMatrix u_inv;
    IntMatrix v_inv;
    std::vector<Int> diag;  // nonzero invariant factors

    std::size_t rank() const { return diag.size(); }

    /// diag padded with zeros to the given shape.
    IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

/// Smith normal form over Z, exact. Pivoting by minimal absolute value; no
/// modular or LLL machinery, instances here are desk scale.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Which transforms to carry through the reduction. Untracked members of the
/// result stay empty; the invariant factors are identical either way.
enum class SnfTracking { none, columns, full };

SmithDecomposition smith_normal_form(const IntMatrix& m, SnfTracking tracking);

/// Invariant factors only, no transform bookkeeping.
std::vector<Int> invariant_factors(const IntMatrix& m);

}  // namespace conormal
