#include "conormal/homology.hpp"

#include "conormal/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace conormal {

std::string AbelianGroup::str() const {
    if (trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank == 1)
        out << "Z", first = false;
    else if (free_rank > 1)
        out << "Z^" << free_rank, first = false;
    for (const Int& t : torsion) {
        if (!first) out << " + ";
        out << "Z/" << t;
        first = false;
    }
    return out.str();
}

AbelianGroup normalized_group(std::size_t free_rank, std::vector<Int> torsion) {
    // SNF of the diagonal matrix on the coefficients is exactly the
    // invariant-factor normal form of the direct sum.
    IntMatrix diag(torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] == 0) throw std::invalid_argument("torsion coefficient 0 is a free summand");
        diag(i, i) = abs(torsion[i]);
    }

    AbelianGroup g;
    g.free_rank = free_rank;
    for (const Int& d : invariant_factors(diag))
        if (d > 1) g.torsion.push_back(d);
    return g;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<Int> torsion = a.torsion;
    torsion.insert(torsion.end(), b.torsion.begin(), b.torsion.end());
    return normalized_group(a.free_rank + b.free_rank, std::move(torsion));
}

AbelianGroup quotient_group(const IntMatrix& out, const IntMatrix& in) {
    const std::size_t n = out.cols();
    if (in.rows() != n) throw std::invalid_argument("quotient_group: shape mismatch");

    SmithDecomposition snf_out = smith_normal_form(out, SnfTracking::columns);
    const std::size_t kernel_rank = n - snf_out.rank();

    // Columns rank+1..n of v span ker(out); coordinates in that basis are the
    // trailing rows of v_inv. The image of `in` must land there.
    IntMatrix coords = snf_out.v_inv * in;
    for (std::size_t r = 0; r < snf_out.rank(); ++r)
        for (std::size_t c = 0; c < coords.cols(); ++c)
            if (coords(r, c) != 0)
                throw InvariantError("quotient_group: image not contained in kernel (delta^2 != 0)");

    IntMatrix presentation(kernel_rank, coords.cols());
    for (std::size_t r = 0; r < kernel_rank; ++r)
        for (std::size_t c = 0; c < coords.cols(); ++c)
            presentation(r, c) = coords(snf_out.rank() + r, c);

    std::vector<Int> factors = invariant_factors(presentation);
    const std::size_t image_rank = factors.size();
    return normalized_group(kernel_rank - image_rank, std::move(factors));
}

AbelianGroup homology(const ConormalComplex& complex, int p) {
    if (p < 0 || p > complex.top_degree()) throw std::out_of_range("homology degree outside 0..d");
    if (!verify_d_squared(complex)) throw InvariantError("homology: delta^2 != 0");
    return quotient_group(complex.boundary_map(p), complex.boundary_map(p + 1));
}

std::size_t rational_betti(const ConormalComplex& complex, int p) {
    if (p < 0 || p > complex.top_degree()) throw std::out_of_range("betti degree outside 0..d");
    if (!verify_d_squared(complex)) throw InvariantError("rational_betti: delta^2 != 0");
    return complex.basis_size(p) - rational_rank(complex.boundary_map(p)) -
           rational_rank(complex.boundary_map(p + 1));
}

HomologySummary full_summary(const ConormalComplex& complex) {
    if (!verify_d_squared(complex)) throw InvariantError("full_summary: delta^2 != 0");
    const int d = complex.top_degree();

    std::vector<std::size_t> rank(d + 2, 0);  // rational rank of D_p, zero maps at the ends
    for (int p = 1; p <= d; ++p) rank[p] = rational_rank(complex.differential(p));

    HomologySummary summary;
    for (int p = 0; p <= d; ++p) {
        summary.groups.push_back(quotient_group(complex.boundary_map(p), complex.boundary_map(p + 1)));
        summary.betti.push_back(complex.basis_size(p) - rank[p] - rank[p + 1]);
        if (summary.betti.back() != summary.groups.back().free_rank)
            throw InvariantError("full_summary: rational betti " + std::to_string(summary.betti.back()) +
                                 " disagrees with free rank " +
                                 std::to_string(summary.groups.back().free_rank) + " in degree " +
                                 std::to_string(p));
    }
    return summary;
}

std::string HomologySummary::str() const {
    std::string out;
    for (std::size_t p = 0; p < groups.size(); ++p)
        out += "H_" + std::to_string(p) + " = " + groups[p].str() + "\n";
    return out;
}

}  // namespace conormal
