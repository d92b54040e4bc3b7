#pragma once

#include "conormal/matrix.hpp"
#include "conormal/poset.hpp"

#include <string>
#include <vector>

namespace conormal {

/// A face together with a co-orientation of its conormal bundle, expressed
/// relative to the preferred basis wedge of the indexing differentials taken
/// in increasing order. sign -1 means the opposite orientation, and
/// f (x) (-eps) = -(f (x) eps).
struct OrientedGenerator {
    std::string face;
    int sign = 1;  // +1 or -1
};

/// Integer chain in a fixed degree, coefficients indexed by the basis order
/// of that degree.
struct ChainVector {
    int degree = 0;
    std::vector<Int> coefficients;
};

/// Graded free abelian chain groups on co-oriented faces with the contraction
/// differential, stored as explicit integer matrices.
class ConormalComplex {
public:
    /// bases[p] lists face ids in basis order for degree p = 0..d;
    /// differentials[p-1] is D_p of shape |F_{p-1}| x |F_p| for p = 1..d.
    ConormalComplex(std::vector<std::vector<std::string>> bases, std::vector<IntMatrix> differentials);

    int top_degree() const { return static_cast<int>(bases_.size()) - 1; }

    const std::vector<std::string>& basis(int p) const;
    std::size_t basis_size(int p) const { return basis(p).size(); }

    /// D_p for p in 1..d.
    const IntMatrix& differential(int p) const;

    /// Zero map of the right shape at p = 0 and p = d+1, D_p otherwise.
    IntMatrix boundary_map(int p) const;

    /// Column index of a face id within its degree.
    std::size_t basis_index(int p, const std::string& face_id) const;

private:
    std::vector<std::vector<std::string>> bases_;
    std::vector<IntMatrix> differentials_;
};

/// Coefficient of eps_{I \ {i}} in the contraction of eps_I by the i-th basis
/// differential: (-1)^(j-1) with j the 1-based place of i in I.
int contraction_sign(int i, const IndexSet& index_set);

/// Assemble the chain complex of a valid poset in the preferred co-orientation
/// basis. Basis order per degree: lexicographic by index set, then by id.
ConormalComplex build_complex(const CornerPoset& poset);

/// D_degree applied to a chain; result lives in degree-1.
ChainVector apply_differential(const ChainVector& c, const ConormalComplex& complex);

/// Signed sum of basis chains in one degree.
ChainVector make_chain(const ConormalComplex& complex, int degree,
                       const std::vector<OrientedGenerator>& generators);

/// True iff D_p * D_{p+1} = 0 for every p.
bool verify_d_squared(const ConormalComplex& complex);

/// Matrix dump used by the CLI: one block per degree with basis labels.
std::string dump_matrices(const ConormalComplex& complex);

}  // namespace conormal
