#pragma once

#include "conormal/complex.hpp"
#include "conormal/matrix.hpp"
#include "conormal/snf.hpp"

#include <string>
#include <vector>

namespace conormal {

/// Finitely generated abelian group in invariant-factor normal form: free rank
/// plus torsion coefficients t_1 | t_2 | ..., all >= 2. Group equality is
/// field equality, so reports can be compared as strings.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup&) const = default;

    /// "0", "Z", "Z^r", with " + Z/t" terms appended for torsion.
    std::string str() const;
};

/// Renormalize arbitrary torsion coefficients (ones dropped, divisibility
/// chain restored) into normal form.
AbelianGroup normalized_group(std::size_t free_rank, std::vector<Int> torsion);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// ker(out) / im(in) for integer maps with out * in = 0: `out` maps the
/// middle group outward, `in` maps into it. Throws InvariantError when the
/// composite is nonzero.
AbelianGroup quotient_group(const IntMatrix& out, const IntMatrix& in);

struct HomologySummary {
    std::vector<AbelianGroup> groups;  // degree 0..d
    std::vector<std::size_t> betti;    // same degrees, computed on the rational path

    int top_degree() const { return static_cast<int>(groups.size()) - 1; }
    std::string str() const;  // "H_<p> = <group>" lines
};

/// ker D_p / im D_{p+1} in normal form.
AbelianGroup homology(const ConormalComplex& complex, int p);

/// |F_p| - rank D_p - rank D_{p+1} with ranks from exact rational elimination,
/// a code path independent of the Smith normal form engine.
std::size_t rational_betti(const ConormalComplex& complex, int p);

/// All degrees, with the cross-path invariant b_p = free_rank(H_p) asserted.
HomologySummary full_summary(const ConormalComplex& complex);

}  // namespace conormal
