#include "conormal/ktheory.hpp"

#include <algorithm>
#include <sstream>

namespace conormal {

PeriodicGroups periodic_groups(const HomologySummary& summary) {
    PeriodicGroups periodic;
    for (std::size_t p = 0; p < summary.groups.size(); ++p) {
        AbelianGroup& target = p % 2 == 0 ? periodic.even : periodic.odd;
        target = direct_sum(target, summary.groups[p]);
    }
    return periodic;
}

Verdict obstruction_verdict(int hypersurface_count, std::size_t k0_rank, bool /*even_torsion_present*/) {
    if (hypersurface_count == 0) return Verdict::NoBoundary;
    return k0_rank == 0 ? Verdict::RationallyUnobstructed : Verdict::Obstructed;
}

KTheoryReport ktheory(const CornerPoset& poset) {
    require_valid(poset);
    const HomologySummary summary = full_summary(build_complex(poset));
    const PeriodicGroups periodic = periodic_groups(summary);

    KTheoryReport report;
    report.k0_rank = periodic.even.free_rank;
    report.k1_rank = periodic.odd.free_rank;
    report.periodic_even = periodic.even;
    report.periodic_odd = periodic.odd;
    report.even_torsion_present = !periodic.even.torsion.empty();
    report.odd_torsion_present = !periodic.odd.torsion.empty();

    report.codim_le_3 = poset.max_codim() <= 3;
    report.even_torsion_free = !report.even_torsion_present;
    if (poset.provenance()) {
        const auto& codims = poset.provenance()->factor_codims;
        const bool all_le_3 = std::all_of(codims.begin(), codims.end(), [](int c) { return c <= 3; });
        const bool one_le_2 = std::any_of(codims.begin(), codims.end(), [](int c) { return c <= 2; });
        if (all_le_3 && one_le_2) report.product_rule = true;
        // a non-qualifying factorization proves nothing, leave unknown
    }

    report.verdict =
        obstruction_verdict(poset.hypersurface_count(), report.k0_rank, report.even_torsion_present);
    report.torsion_caveat =
        report.verdict == Verdict::RationallyUnobstructed && report.even_torsion_present;
    return report;
}

std::string KTheoryReport::str() const {
    std::ostringstream out;
    out << "K0 ⊗ Q rank = " << k0_rank << "\n";
    out << "K1 ⊗ Q rank = " << k1_rank << "\n";
    out << "H^pcn_ev = " << periodic_even.str() << "\n";
    out << "H^pcn_odd = " << periodic_odd.str() << "\n";
    out << "integral: codim<=3=" << (codim_le_3 ? "true" : "false")
        << " even-torsion-free=" << (even_torsion_free ? "true" : "false")
        << " product-rule=" << (product_rule ? "true" : "unknown") << "\n";
    out << "verdict = ";
    switch (verdict) {
        case Verdict::NoBoundary:
            out << "NO_BOUNDARY";
            break;
        case Verdict::RationallyUnobstructed:
            out << "RATIONALLY_UNOBSTRUCTED" << (torsion_caveat ? "+TORSION_CAVEAT" : "");
            break;
        case Verdict::Obstructed:
            out << "OBSTRUCTED(rank " << k0_rank << ")";
            break;
    }
    out << "\n";
    return out.str();
}

}  // namespace conormal
