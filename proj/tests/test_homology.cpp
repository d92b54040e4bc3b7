#include <doctest.h>

#include "conormal/complex.hpp"
#include "conormal/errors.hpp"
#include "conormal/homology.hpp"
#include "conormal/poset.hpp"

#include "oracle.hpp"
#include "support.hpp"

#include <random>

using namespace conormal;

namespace {

AbelianGroup free_group(std::size_t rank) { return AbelianGroup{rank, {}}; }

std::vector<AbelianGroup> groups_of(const CornerPoset& poset) {
    return full_summary(build_complex(poset)).groups;
}

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    return m;
}

}  // namespace

TEST_CASE("group formatting") {
    CHECK(AbelianGroup{}.str() == "0");
    CHECK(free_group(1).str() == "Z");
    CHECK(free_group(3).str() == "Z^3");
    CHECK(AbelianGroup{0, {Int(2)}}.str() == "Z/2");
    CHECK(AbelianGroup{2, {Int(2), Int(4)}}.str() == "Z^2 + Z/2 + Z/4");
}

TEST_CASE("normal form of torsion coefficients") {
    AbelianGroup g = normalized_group(1, {Int(6), Int(4)});
    CHECK(g.free_rank == 1);
    CHECK(g.torsion == std::vector<Int>{Int(2), Int(12)});
    CHECK(normalized_group(0, {Int(1), Int(1)}).trivial());
    CHECK(normalized_group(2, {}).str() == "Z^2");
    CHECK_THROWS_AS(normalized_group(0, {Int(0)}), std::invalid_argument);
}

TEST_CASE("direct sums renormalize") {
    AbelianGroup a{1, {Int(2)}};
    AbelianGroup b{0, {Int(3)}};
    AbelianGroup sum = direct_sum(a, b);
    CHECK(sum.free_rank == 1);
    CHECK(sum.torsion == std::vector<Int>{Int(6)});
}

TEST_CASE("quotient groups on handcrafted maps") {
    SUBCASE("Z/2 from a doubled generator") {
        // ker([1 1]) / im([2, -2]^T)
        AbelianGroup g = quotient_group(from_rows({{1, 1}}), from_rows({{2}, {-2}}));
        CHECK(g == AbelianGroup{0, {Int(2)}});
        CHECK(g == oracle::quotient(from_rows({{1, 1}}), from_rows({{2}, {-2}})));
    }
    SUBCASE("free quotient") {
        AbelianGroup g = quotient_group(IntMatrix(0, 3), from_rows({{1}, {0}, {0}}));
        CHECK(g == free_group(2));
    }
    SUBCASE("image outside the kernel is an invariant breach") {
        CHECK_THROWS_AS(quotient_group(from_rows({{1, 0}}), from_rows({{1}, {0}})), InvariantError);
    }
}

TEST_CASE("classical anchor values") {
    CHECK(groups_of(closed_manifold()) == std::vector<AbelianGroup>{free_group(1)});
    CHECK(groups_of(interval()) == std::vector<AbelianGroup>{free_group(0), free_group(1)});
    CHECK(homology(build_complex(boundary_components(4)), 1) == free_group(3));
    CHECK(homology(build_complex(boundary_components(4)), 0) == free_group(0));
}

TEST_CASE("square and triangle concentrate in the top degree") {
    const std::vector<AbelianGroup> expected{free_group(0), free_group(0), free_group(1)};
    CHECK(groups_of(hypercube(2)) == expected);
    CHECK(groups_of(simplex(2)) == expected);
}

TEST_CASE("hypercube homology sits in the top degree") {
    HomologySummary summary = full_summary(build_complex(hypercube(3)));
    for (int p = 0; p <= 2; ++p) CHECK(summary.groups[p].trivial());
    CHECK(summary.groups[3] == free_group(1));
    CHECK(summary.betti == std::vector<std::size_t>{0, 0, 0, 1});
}

TEST_CASE("rational betti numbers") {
    CHECK(rational_betti(build_complex(simplex(2)), 2) == 1);
    CHECK(rational_betti(build_complex(simplex(2)), 0) == 0);

    // degree with an empty basis
    ConormalComplex empty_top({{"X"}, {}}, {IntMatrix(1, 0)});
    CHECK(rational_betti(empty_top, 1) == 0);
    CHECK(homology(empty_top, 1).trivial());

    CHECK_THROWS_AS(rational_betti(build_complex(interval()), 5), std::out_of_range);
}

TEST_CASE("homology detects torsion in synthetic complexes") {
    // Z --2--> Z, the conormal shape of nothing geometric; exercises torsion.
    ConormalComplex doubled({{"a"}, {"b"}}, {from_rows({{2}})});
    HomologySummary summary = full_summary(doubled);
    CHECK(summary.groups[0] == AbelianGroup{0, {Int(2)}});
    CHECK(summary.groups[1].trivial());
    CHECK(summary.betti == std::vector<std::size_t>{0, 0});
}

TEST_CASE("summaries of the builder zoo match the oracle on small complexes") {
    std::mt19937 rng(2718);
    auto zoo = support::builder_zoo();
    for (int trial = 0; trial < 12; ++trial)
        zoo.push_back({"random", support::random_iterated_product(rng)});
    for (const auto& [name, poset] : zoo) {
        CAPTURE(name);
        ConormalComplex c = build_complex(poset);
        bool small = true;
        for (int p = 0; p <= c.top_degree(); ++p) small = small && c.basis_size(p) <= 6;
        if (!small) continue;
        HomologySummary summary = full_summary(c);
        for (int p = 0; p <= c.top_degree(); ++p)
            CHECK(summary.groups[p] == oracle::quotient(c.boundary_map(p), c.boundary_map(p + 1)));
    }
}

TEST_CASE("euler characteristic agrees across faces and betti numbers") {
    std::mt19937 rng(31);
    auto zoo = support::builder_zoo();
    for (int trial = 0; trial < 15; ++trial)
        zoo.push_back({"random", support::random_iterated_product(rng)});
    for (const auto& [name, poset] : zoo) {
        CAPTURE(name);
        ConormalComplex c = build_complex(poset);
        HomologySummary summary = full_summary(c);
        long long faces = 0, betti = 0;
        for (int p = 0; p <= c.top_degree(); ++p) {
            const long long sign = p % 2 == 0 ? 1 : -1;
            faces += sign * static_cast<long long>(c.basis_size(p));
            betti += sign * static_cast<long long>(summary.betti[p]);
        }
        CHECK(faces == betti);
    }
}

TEST_CASE("homology is invariant under basis symmetries") {
    std::mt19937 rng(4096);
    auto zoo = support::builder_zoo();
    for (int trial = 0; trial < 8; ++trial)
        zoo.push_back({"random", support::random_iterated_product(rng, 150)});
    for (const auto& [name, poset] : zoo) {
        CAPTURE(name);
        ConormalComplex c = build_complex(poset);
        const HomologySummary reference = full_summary(c);

        HomologySummary flipped = full_summary(support::flip_orientations(c, rng));
        HomologySummary permuted = full_summary(support::permute_faces(c, rng));
        CHECK(flipped.groups == reference.groups);
        CHECK(permuted.groups == reference.groups);

        CornerPoset relabeled = support::relabel_hypersurfaces(poset, rng);
        REQUIRE(validate(relabeled).ok());
        CHECK(full_summary(build_complex(relabeled)).groups == reference.groups);
    }
}

TEST_CASE("kuenneth on torsion-free factors") {
    const CornerPoset factors[] = {interval(), simplex(2), boundary_components(3)};
    for (const CornerPoset& a : factors)
        for (const CornerPoset& b : factors) {
            HomologySummary sa = full_summary(build_complex(a));
            HomologySummary sb = full_summary(build_complex(b));
            HomologySummary sp = full_summary(build_complex(product(a, b)));
            CHECK(sp.betti == oracle::kuenneth_betti(sa.betti, sb.betti));
            for (std::size_t p = 0; p < sp.groups.size(); ++p) {
                CHECK(sp.groups[p].torsion.empty());
                CHECK(sp.groups[p].free_rank == sp.betti[p]);
            }
        }
}
