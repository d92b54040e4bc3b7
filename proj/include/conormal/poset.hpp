#pragma once

#include "conormal/errors.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conormal {

/// Strictly increasing tuple of 1-based boundary hypersurface indices.
using IndexSet = std::vector<int>;

std::string index_set_str(const IndexSet& s);

/// A connected face of codimension `codim`, named by the hypersurfaces whose
/// intersection closure contains it.
struct Face {
    std::string id;
    int codim = 0;
    IndexSet index_set;

    bool operator==(const Face&) const = default;
};

/// Closure relation "lower is contained in the closure of upper", where upper
/// has codimension one less and `missing_index` is the hypersurface whose
/// defining function cuts lower out of upper.
struct Adjacency {
    std::string lower;
    std::string upper;
    int missing_index = 0;

    bool operator==(const Adjacency&) const = default;
    auto operator<=>(const Adjacency&) const = default;
};

struct Violation {
    std::string rule;    // name of the violated invariant
    std::string detail;  // offending face / adjacency ids
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string str() const;
};

/// Codimensions of the factors this poset was assembled from, recorded by the
/// product constructor. Consumed by the K-theory integrality flags; the
/// condition is about manifold structure and cannot be recovered from the
/// face data alone.
struct ProductProvenance {
    std::vector<int> factor_codims;
};

/// Combinatorial presentation of a compact connected manifold with embedded
/// corners: hypersurface count, connected faces with their index sets, and the
/// closure adjacency between consecutive codimensions. Immutable after
/// construction; `max_codim` is derived, never declared.
class CornerPoset {
public:
    CornerPoset() = default;
    CornerPoset(int n, std::vector<Face> faces, std::vector<Adjacency> adjacencies);

    int hypersurface_count() const { return n_; }
    /// Maximal occupied codimension d (0 when the face list is empty).
    int max_codim() const { return d_; }

    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<Adjacency>& adjacencies() const { return adjacencies_; }

    const Face* find_face(std::string_view id) const;

    /// Faces of codimension p sorted lexicographically by index set, then by
    /// id. This is the basis order every matrix in the project uses.
    std::vector<const Face*> faces_of_codim(int p) const;

    const std::optional<ProductProvenance>& provenance() const { return provenance_; }
    void set_provenance(ProductProvenance p) { provenance_ = std::move(p); }

private:
    int n_ = 0;
    int d_ = 0;
    std::vector<Face> faces_;
    std::vector<Adjacency> adjacencies_;
    std::optional<ProductProvenance> provenance_;
};

/// Check every structural invariant; the report is empty iff the poset is a
/// well-formed presentation. Violations are data, not failures.
ValidationReport validate(const CornerPoset& poset);

/// Throw ValidationError if validate(poset) is nonempty.
void require_valid(const CornerPoset& poset);

// Builders. All outputs are valid by construction.
CornerPoset closed_manifold();
CornerPoset boundary_components(int p);
CornerPoset interval();  // boundary_components(2)
CornerPoset simplex(int k);
CornerPoset product(const CornerPoset& a, const CornerPoset& b);
CornerPoset hypercube(int k);

/// Derive the full closure adjacency from index sets alone. Only sound when
/// index sets are unique; throws AmbiguityError naming the duplicated set
/// otherwise.
std::vector<Adjacency> auto_adjacency(const std::vector<Face>& faces);

/// Read the line-oriented file format without validating (syntax errors only).
/// Adjacency lines may be omitted entirely, in which case auto_adjacency is
/// applied.
CornerPoset read_poset(std::istream& in);
CornerPoset read_poset(std::string_view text);

/// read_poset followed by validation; throws ValidationError when the report
/// is nonempty.
CornerPoset parse(std::istream& in);
CornerPoset parse(std::string_view text);

/// Deterministic emitter for the same file format; adjacency lines are always
/// written explicitly.
std::string serialize(const CornerPoset& poset);

}  // namespace conormal
