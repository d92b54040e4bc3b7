#include "conormal/snf.hpp"

#include <cstdlib>
#include <optional>
#include <utility>

namespace conormal {

namespace {

// Workspace bundling the matrix with its transform bookkeeping. Every
// elementary operation on `a` is mirrored on u/u_inv (row ops) or v/v_inv
// (column ops) so that u * M * v = a holds throughout.
struct Workspace {
    IntMatrix a, u, u_inv, v, v_inv;
    bool track_rows;
    bool track_cols;

    Workspace(const IntMatrix& m, SnfTracking tracking)
        : a(m),
          track_rows(tracking == SnfTracking::full),
          track_cols(tracking != SnfTracking::none) {
        if (track_rows) {
            u = IntMatrix::identity(m.rows());
            u_inv = IntMatrix::identity(m.rows());
        }
        if (track_cols) {
            v = IntMatrix::identity(m.cols());
            v_inv = IntMatrix::identity(m.cols());
        }
    }

    void swap_rows(std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        if (track_rows) {
            u.swap_rows(i, j);
            u_inv.swap_cols(i, j);
        }
    }
    void swap_cols(std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        if (track_cols) {
            v.swap_cols(i, j);
            v_inv.swap_rows(i, j);
        }
    }
    void negate_row(std::size_t i) {
        a.negate_row(i);
        if (track_rows) {
            u.negate_row(i);
            u_inv.negate_col(i);
        }
    }
    // row[i] += k * row[j]
    void add_row(std::size_t i, std::size_t j, const Int& k) {
        a.add_row_multiple(i, j, k);
        if (track_rows) {
            u.add_row_multiple(i, j, k);
            u_inv.add_col_multiple(j, i, -k);
        }
    }
    // col[i] += k * col[j]
    void add_col(std::size_t i, std::size_t j, const Int& k) {
        a.add_col_multiple(i, j, k);
        if (track_cols) {
            v.add_col_multiple(i, j, k);
            v_inv.add_row_multiple(j, i, -k);
        }
    }
};

// Quotient with balanced remainder, |a - q*p| <= |p|/2. Keeps the reduction
// quotients, and with them the transform entries, much smaller than truncated
// division would.
Int balanced_quotient(const Int& a, const Int& p) {
    Int q = a / p;
    const Int r = a - q * p;
    if (2 * abs(r) > abs(p)) q += (r < 0) == (p < 0) ? 1 : -1;
    return q;
}

std::optional<std::pair<std::size_t, std::size_t>> min_abs_pivot(const IntMatrix& a,
                                                                 std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int mag = abs(a(i, j));
            if (!best || mag < best_abs) {
                best = {i, j};
                best_abs = std::move(mag);
                if (best_abs == 1) return best;
            }
        }
    return best;
}

}  // namespace

IntMatrix SmithDecomposition::diagonal_matrix(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
    return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    return smith_normal_form(m, SnfTracking::full);
}

SmithDecomposition smith_normal_form(const IntMatrix& m, SnfTracking tracking) {
    Workspace w(m, tracking);
    const std::size_t limit = std::min(m.rows(), m.cols());

    std::size_t t = 0;
    for (; t < limit; ++t) {
        auto pos = min_abs_pivot(w.a, t);
        if (!pos) break;

        for (;;) {
            w.swap_rows(t, pos->first);
            w.swap_cols(t, pos->second);

            // Clear column t with truncated division; nonzero remainders
            // leave strictly smaller entries, so re-picking the minimal pivot
            // terminates.
            bool dirty = false;
            for (std::size_t i = t + 1; i < w.a.rows(); ++i) {
                if (w.a(i, t) == 0) continue;
                Int q = balanced_quotient(w.a(i, t), w.a(t, t));
                w.add_row(i, t, -q);
                if (w.a(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < w.a.cols(); ++j) {
                if (w.a(t, j) == 0) continue;
                Int q = balanced_quotient(w.a(t, j), w.a(t, t));
                w.add_col(j, t, -q);
                if (w.a(t, j) != 0) dirty = true;
            }
            if (dirty) {
                pos = min_abs_pivot(w.a, t);
                continue;
            }

            // Pivot is lone; force it to divide the remaining submatrix.
            bool divides = true;
            for (std::size_t i = t + 1; i < w.a.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < w.a.cols() && divides; ++j)
                    if (w.a(i, j) % w.a(t, t) != 0) {
                        w.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
            pos = min_abs_pivot(w.a, t);
        }

        if (w.a(t, t) < 0) w.negate_row(t);
    }

    SmithDecomposition out;
    out.diag.reserve(t);
    for (std::size_t i = 0; i < t; ++i) out.diag.push_back(w.a(i, i));
    out.u = std::move(w.u);
    out.u_inv = std::move(w.u_inv);
    out.v = std::move(w.v);
    out.v_inv = std::move(w.v_inv);
    return out;
}

std::vector<Int> invariant_factors(const IntMatrix& m) {
    return smith_normal_form(m, SnfTracking::none).diag;
}

}  // namespace conormal
