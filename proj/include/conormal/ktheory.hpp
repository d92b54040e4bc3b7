#pragma once

#include "conormal/homology.hpp"
#include "conormal/poset.hpp"

#include <optional>
#include <string>

namespace conormal {

/// Even and odd periodic groups: the direct sums of the even- and
/// odd-degree homology groups, renormalized.
struct PeriodicGroups {
    AbelianGroup even;
    AbelianGroup odd;
};

PeriodicGroups periodic_groups(const HomologySummary& summary);

/// Group-level verdict on the stably-Fredholm perturbation property. The
/// statement is about the receiving group of the boundary analytic index,
/// never about a specific operator.
enum class Verdict {
    NoBoundary,              // no hypersurfaces: every elliptic operator is already Fredholm
    RationallyUnobstructed,  // receiving group rationally zero
    Obstructed,              // receiving group has positive rational rank
};

Verdict obstruction_verdict(int hypersurface_count, std::size_t k0_rank, bool even_torsion_present);

struct KTheoryReport {
    std::size_t k0_rank = 0;  // rank of K_0 of the b-compact operators, tensored with Q
    std::size_t k1_rank = 0;
    AbelianGroup periodic_even;
    AbelianGroup periodic_odd;
    bool even_torsion_present = false;
    bool odd_torsion_present = false;

    // Integrality of the rank dictionary (rational isomorphism always holds;
    // these flag the known torsion-free situations).
    bool codim_le_3 = false;
    bool even_torsion_free = false;
    /// Known product of codim <= 3 factors with one factor of codim <= 2;
    /// nullopt when the poset carries no product provenance (unknown).
    std::optional<bool> product_rule;

    Verdict verdict = Verdict::NoBoundary;
    /// Set when rationally unobstructed but even torsion exists: the integral
    /// obstruction is not excluded.
    bool torsion_caveat = false;

    std::string str() const;
};

KTheoryReport ktheory(const CornerPoset& poset);

}  // namespace conormal
