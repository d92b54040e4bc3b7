#pragma once

// Shared helpers for the unit and acceptance suites: a zoo of standard
// builders, seeded random iterated products, and the complex transforms the
// invariance properties quantify over.

#include "conormal/complex.hpp"
#include "conormal/poset.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace support {

struct NamedPoset {
    std::string name;
    conormal::CornerPoset poset;
};

inline std::vector<NamedPoset> builder_zoo() {
    std::vector<NamedPoset> zoo;
    zoo.push_back({"closed", conormal::closed_manifold()});
    for (int p = 1; p <= 6; ++p)
        zoo.push_back({"boundary:" + std::to_string(p), conormal::boundary_components(p)});
    for (int k = 1; k <= 4; ++k) zoo.push_back({"simplex:" + std::to_string(k), conormal::simplex(k)});
    for (int k = 1; k <= 4; ++k) zoo.push_back({"cube:" + std::to_string(k), conormal::hypercube(k)});
    return zoo;
}

/// Iterated product of 2..3 random factors from {interval, simplex(2),
/// simplex(3), boundary(3)}, capped so the suites stay fast.
inline conormal::CornerPoset random_iterated_product(std::mt19937& rng,
                                                     std::size_t max_faces = 300) {
    auto pick = [&rng]() -> conormal::CornerPoset {
        switch (rng() % 4) {
            case 0: return conormal::interval();
            case 1: return conormal::simplex(2);
            case 2: return conormal::simplex(3);
            default: return conormal::boundary_components(3);
        }
    };
    conormal::CornerPoset result = pick();
    const int extra_factors = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < extra_factors; ++i) {
        conormal::CornerPoset candidate = conormal::product(result, pick());
        if (candidate.faces().size() > max_faces) break;
        result = std::move(candidate);
    }
    return result;
}

/// Random flip of the preferred co-orientation of some basis generators:
/// conjugation of every differential by +-1 diagonal matrices.
inline conormal::ConormalComplex flip_orientations(const conormal::ConormalComplex& complex,
                                                   std::mt19937& rng) {
    const int d = complex.top_degree();
    std::vector<std::vector<int>> signs(d + 1);
    for (int p = 0; p <= d; ++p) {
        signs[p].resize(complex.basis_size(p));
        for (auto& s : signs[p]) s = rng() % 2 == 0 ? 1 : -1;
    }

    std::vector<std::vector<std::string>> bases;
    for (int p = 0; p <= d; ++p) bases.push_back(complex.basis(p));
    std::vector<conormal::IntMatrix> diffs;
    for (int p = 1; p <= d; ++p) {
        conormal::IntMatrix m = complex.differential(p);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m(r, c) *= signs[p - 1][r] * signs[p][c];
        diffs.push_back(std::move(m));
    }
    return conormal::ConormalComplex(std::move(bases), std::move(diffs));
}

/// Random permutation of the faces within each degree.
inline conormal::ConormalComplex permute_faces(const conormal::ConormalComplex& complex,
                                               std::mt19937& rng) {
    const int d = complex.top_degree();
    std::vector<std::vector<std::size_t>> perm(d + 1);  // new position -> old position
    for (int p = 0; p <= d; ++p) {
        perm[p].resize(complex.basis_size(p));
        std::iota(perm[p].begin(), perm[p].end(), 0);
        std::shuffle(perm[p].begin(), perm[p].end(), rng);
    }

    std::vector<std::vector<std::string>> bases(d + 1);
    for (int p = 0; p <= d; ++p)
        for (std::size_t i = 0; i < perm[p].size(); ++i)
            bases[p].push_back(complex.basis(p)[perm[p][i]]);

    std::vector<conormal::IntMatrix> diffs;
    for (int p = 1; p <= d; ++p) {
        const conormal::IntMatrix& old = complex.differential(p);
        conormal::IntMatrix m(old.rows(), old.cols());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = old(perm[p - 1][r], perm[p][c]);
        diffs.push_back(std::move(m));
    }
    return conormal::ConormalComplex(std::move(bases), std::move(diffs));
}

/// Relabel the hypersurfaces 1..n by a random permutation; index sets are
/// re-sorted, face ids kept.
inline conormal::CornerPoset relabel_hypersurfaces(const conormal::CornerPoset& poset,
                                                   std::mt19937& rng) {
    const int n = poset.hypersurface_count();
    std::vector<int> to_new(n + 1);
    std::iota(to_new.begin(), to_new.end(), 0);
    std::shuffle(to_new.begin() + 1, to_new.end(), rng);

    std::vector<conormal::Face> faces;
    for (const conormal::Face& f : poset.faces()) {
        conormal::IndexSet s;
        for (int i : f.index_set) s.push_back(to_new[i]);
        std::sort(s.begin(), s.end());
        faces.push_back(conormal::Face{f.id, f.codim, std::move(s)});
    }
    std::vector<conormal::Adjacency> adj;
    for (const conormal::Adjacency& a : poset.adjacencies())
        adj.push_back(conormal::Adjacency{a.lower, a.upper, to_new[a.missing_index]});
    return conormal::CornerPoset(n, std::move(faces), std::move(adj));
}

}  // namespace support
