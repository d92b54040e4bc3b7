#pragma once

#include "conormal/homology.hpp"
#include "conormal/matrix.hpp"
#include "conormal/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conormal {

/// One-row first-page cochain complex of the orbit-space filtration by face
/// codimension. Position s carries one generator per face of codimension
/// d - s; the differential d1 is assembled directly from the adjacency data
/// with its own sign computation — none of the chain-complex construction
/// code is shared, so agreement with the conormal path is a real check.
struct OrbitCochainComplex {
    int ambient_degree = 2;  // N, even; enters degree bookkeeping only
    std::vector<std::vector<std::string>> generators;  // position s = 0..d
    std::vector<IntMatrix> d1;  // d1[s]: position s -> s+1, for s = 0..d-1

    int top_position() const { return static_cast<int>(generators.size()) - 1; }

    /// Cohomological degree N - (d - s) carried by position s.
    int cohomological_degree(int s) const { return ambient_degree - (top_position() - s); }
};

/// Default ambient degree: d rounded up to even, at least 2.
int default_ambient_degree(const CornerPoset& poset);

OrbitCochainComplex build_orbit_cochain(const CornerPoset& poset, int ambient_degree);
OrbitCochainComplex build_orbit_cochain(const CornerPoset& poset);

/// Second-page group at position s: ker(d1 out of s) / im(d1 into s). The
/// one-row shape makes collapse structural, so this is already the graded
/// piece of the orbit-space cohomology in degree N - (d - s).
AbelianGroup orbit_cohomology(const OrbitCochainComplex& complex, int s);

struct ComparisonLine {
    int degree = 0;  // conormal degree p; orbit position is d - p
    AbelianGroup conormal;
    AbelianGroup orbit;
    bool ok = false;
};

struct ComparisonReport {
    std::vector<ComparisonLine> lines;
    bool pass = false;

    /// "p: conormal=<group> orbit=<group> OK|MISMATCH" lines plus the final
    /// B-ISOMORPHISM verdict.
    std::string str() const;
};

/// Compare the two computation paths degree by degree. A mismatch is a bug,
/// not a property of the input.
ComparisonReport assert_B_isomorphism(const CornerPoset& poset,
                                      std::optional<int> ambient_degree = std::nullopt);

}  // namespace conormal
