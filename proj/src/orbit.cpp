#include "conormal/orbit.hpp"

#include "conormal/complex.hpp"
#include "conormal/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace conormal {

namespace {

// Sign of d1 on the generator pair (f, g): parity of the number of indices of
// f preceding the one that is dropped. Equal in value to the contraction sign
// of the conormal differential, computed here from scratch.
int orbit_sign(const IndexSet& lower_set, int dropped) {
    int before = 0;
    bool present = false;
    for (int k : lower_set) {
        if (k < dropped) ++before;
        if (k == dropped) present = true;
    }
    if (!present) throw std::invalid_argument("orbit_sign: dropped index not in index set");
    return before % 2 == 0 ? 1 : -1;
}

}  // namespace

int default_ambient_degree(const CornerPoset& poset) {
    int n = std::max(poset.max_codim(), 2);
    return n % 2 == 0 ? n : n + 1;
}

OrbitCochainComplex build_orbit_cochain(const CornerPoset& poset) {
    return build_orbit_cochain(poset, default_ambient_degree(poset));
}

OrbitCochainComplex build_orbit_cochain(const CornerPoset& poset, int ambient_degree) {
    require_valid(poset);
    const int d = poset.max_codim();
    if (ambient_degree % 2 != 0)
        throw std::invalid_argument("ambient degree must be even, got " +
                                    std::to_string(ambient_degree));
    if (ambient_degree < std::max(d, 2))
        throw std::invalid_argument("ambient degree must be at least max(d, 2)");

    OrbitCochainComplex complex;
    complex.ambient_degree = ambient_degree;
    complex.generators.resize(d + 1);

    // Position s holds one generator per face of codimension d - s, ordered
    // lexicographically by index set then id.
    std::map<std::string, std::pair<int, std::size_t>> slot;
    std::map<std::string, IndexSet> sets;
    for (int s = 0; s <= d; ++s) {
        std::vector<const Face*> level;
        for (const Face& f : poset.faces())
            if (f.codim == d - s) level.push_back(&f);
        std::sort(level.begin(), level.end(), [](const Face* a, const Face* b) {
            return std::tie(a->index_set, a->id) < std::tie(b->index_set, b->id);
        });
        for (const Face* f : level) {
            slot[f->id] = {s, complex.generators[s].size()};
            sets[f->id] = f->index_set;
            complex.generators[s].push_back(f->id);
        }
    }

    complex.d1.reserve(d);
    for (int s = 0; s + 1 <= d; ++s)
        complex.d1.emplace_back(complex.generators[s + 1].size(), complex.generators[s].size());

    for (const Adjacency& a : poset.adjacencies()) {
        const auto [s, col] = slot.at(a.lower);
        const auto row = slot.at(a.upper).second;
        complex.d1[s](row, col) = orbit_sign(sets.at(a.lower), a.missing_index);
    }

    return complex;
}

AbelianGroup orbit_cohomology(const OrbitCochainComplex& complex, int s) {
    const int d = complex.top_position();
    if (s < 0 || s > d) throw std::out_of_range("position outside 0..d");
    const std::size_t here = complex.generators[s].size();
    IntMatrix outgoing = s < d ? complex.d1[s] : IntMatrix(0, here);
    IntMatrix incoming = s > 0 ? complex.d1[s - 1] : IntMatrix(here, 0);
    return quotient_group(outgoing, incoming);
}

std::string ComparisonReport::str() const {
    std::ostringstream out;
    for (const ComparisonLine& line : lines)
        out << line.degree << ": conormal=" << line.conormal.str() << " orbit=" << line.orbit.str()
            << (line.ok ? " OK" : " MISMATCH") << "\n";
    out << "B-ISOMORPHISM: " << (pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

ComparisonReport assert_B_isomorphism(const CornerPoset& poset, std::optional<int> ambient_degree) {
    const ConormalComplex chain = build_complex(poset);
    const OrbitCochainComplex cochain =
        build_orbit_cochain(poset, ambient_degree.value_or(default_ambient_degree(poset)));
    const int d = poset.max_codim();
    if (!verify_d_squared(chain)) throw InvariantError("assert_B_isomorphism: delta^2 != 0");

    ComparisonReport report;
    report.pass = true;
    for (int p = 0; p <= d; ++p) {
        ComparisonLine line;
        line.degree = p;
        line.conormal = quotient_group(chain.boundary_map(p), chain.boundary_map(p + 1));
        line.orbit = orbit_cohomology(cochain, d - p);
        line.ok = line.conormal == line.orbit;
        report.pass = report.pass && line.ok;
        report.lines.push_back(std::move(line));
    }
    return report;
}

}  // namespace conormal
