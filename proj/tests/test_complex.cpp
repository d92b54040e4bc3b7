#include <doctest.h>

#include "conormal/complex.hpp"
#include "conormal/errors.hpp"
#include "conormal/poset.hpp"

#include "support.hpp"

#include <random>

using namespace conormal;

TEST_CASE("contraction sign rule") {
    CHECK(contraction_sign(1, {1, 3}) == 1);
    CHECK(contraction_sign(3, {1, 3}) == -1);
    CHECK(contraction_sign(4, {2, 4, 7}) == -1);  // e_4 -| (e_2 ^ e_4 ^ e_7) = -e_2 ^ e_7
    CHECK(contraction_sign(7, {2, 4, 7}) == 1);
    CHECK_THROWS_AS(contraction_sign(5, {1, 3}), std::invalid_argument);
}

TEST_CASE("interval differential is a row of ones") {
    ConormalComplex c = build_complex(interval());
    REQUIRE(c.top_degree() == 1);
    const IntMatrix& d1 = c.differential(1);
    REQUIRE(d1.rows() == 1);
    REQUIRE(d1.cols() == 2);
    CHECK(d1(0, 0) == 1);
    CHECK(d1(0, 1) == 1);
}

TEST_CASE("square vertex column carries the contraction signs") {
    ConormalComplex c = build_complex(hypercube(2));
    // vertex with index set {1,3}: +1 at the edge {3} (drop 1, place 1),
    // -1 at the edge {1} (drop 3, place 2)
    const std::size_t v = 0;  // {1,3} is first in lexicographic order
    const IntMatrix& d2 = c.differential(2);
    const std::size_t edge1 = 0, edge3 = 2;  // degree-1 basis {1},{2},{3},{4}
    CHECK(d2(edge3, v) == 1);
    CHECK(d2(edge1, v) == -1);
    CHECK(d2(1, v) == 0);
    CHECK(d2(3, v) == 0);
}

TEST_CASE("closed manifold has no differentials") {
    ConormalComplex c = build_complex(closed_manifold());
    CHECK(c.top_degree() == 0);
    CHECK(c.basis(0) == std::vector<std::string>{"X"});
}

TEST_CASE("build_complex rejects invalid posets") {
    CornerPoset broken(1, {Face{"X", 0, {}}}, {});
    CHECK_THROWS_AS(build_complex(broken), ValidationError);
}

TEST_CASE("apply_differential") {
    ConormalComplex square = build_complex(hypercube(2));

    SUBCASE("the diagonal vertex cycle maps to zero") {
        ChainVector cycle = make_chain(square, 2,
                                       {{"H1*H1", 1}, {"H1*H2", -1}, {"H2*H1", -1}, {"H2*H2", 1}});
        ChainVector image = apply_differential(cycle, square);
        CHECK(image.degree == 1);
        for (const Int& x : image.coefficients) CHECK(x == 0);
    }

    SUBCASE("endpoint difference on the interval is a cycle") {
        ConormalComplex c = build_complex(interval());
        ChainVector chain = make_chain(c, 1, {{"H1", 1}, {"H2", -1}});
        ChainVector image = apply_differential(chain, c);
        CHECK(image.coefficients == std::vector<Int>{0});
    }

    SUBCASE("zero maps to zero") {
        ChainVector zero{2, std::vector<Int>(square.basis_size(2))};
        ChainVector image = apply_differential(zero, square);
        for (const Int& x : image.coefficients) CHECK(x == 0);
    }

    SUBCASE("degree 0 is rejected") {
        ChainVector chain{0, std::vector<Int>(square.basis_size(0))};
        CHECK_THROWS_AS(apply_differential(chain, square), std::invalid_argument);
    }
}

TEST_CASE("delta squared vanishes") {
    CHECK(verify_d_squared(build_complex(simplex(4))));
    CHECK(verify_d_squared(build_complex(hypercube(5))));
    for (const auto& [name, poset] : support::builder_zoo()) {
        CAPTURE(name);
        CHECK(verify_d_squared(build_complex(poset)));
    }
    std::mt19937 rng(42);
    for (int trial = 0; trial < 25; ++trial)
        CHECK(verify_d_squared(build_complex(support::random_iterated_product(rng))));
}

TEST_CASE("a corrupted sign breaks delta squared") {
    ConormalComplex square = build_complex(hypercube(2));
    std::vector<std::vector<std::string>> bases{square.basis(0), square.basis(1), square.basis(2)};
    std::vector<IntMatrix> diffs{square.differential(1), square.differential(2)};
    diffs[1](0, 0) = -diffs[1](0, 0);
    ConormalComplex corrupted(std::move(bases), std::move(diffs));
    CHECK_FALSE(verify_d_squared(corrupted));
}

TEST_CASE("columns have exactly codim entries, all unit") {
    auto zoo = support::builder_zoo();
    std::mt19937 rng(43);
    for (int trial = 0; trial < 10; ++trial)
        zoo.push_back({"random product", support::random_iterated_product(rng)});
    for (const auto& [name, poset] : zoo) {
        CAPTURE(name);
        ConormalComplex c = build_complex(poset);
        for (int p = 1; p <= c.top_degree(); ++p) {
            const IntMatrix& d = c.differential(p);
            for (std::size_t col = 0; col < d.cols(); ++col) {
                int nonzero = 0;
                for (std::size_t row = 0; row < d.rows(); ++row) {
                    if (d(row, col) == 0) continue;
                    ++nonzero;
                    CHECK(abs(d(row, col)) == 1);
                }
                CHECK(nonzero == p);
            }
        }
        // the nonzero rows are exactly the adjacent faces
        for (const Adjacency& a : poset.adjacencies()) {
            const int p = poset.find_face(a.lower)->codim;
            CHECK(c.differential(p)(c.basis_index(p - 1, a.upper), c.basis_index(p, a.lower)) != 0);
        }
    }
}

TEST_CASE("product differential satisfies the Leibniz rule") {
    const CornerPoset a_poset = simplex(2), b_poset = interval();
    const CornerPoset prod = product(a_poset, b_poset);
    ConormalComplex a = build_complex(a_poset), b = build_complex(b_poset), p = build_complex(prod);

    auto split = [](const std::string& id) {
        const auto star = id.find('*');
        return std::pair(id.substr(0, star), id.substr(star + 1));
    };
    auto codim_of = [&](const CornerPoset& poset, const std::string& id) {
        return poset.find_face(id)->codim;
    };
    auto entry = [](const ConormalComplex& c, int deg, const std::string& row_id,
                    const std::string& col_id) -> Int {
        return c.differential(deg)(c.basis_index(deg - 1, row_id), c.basis_index(deg, col_id));
    };

    for (int deg = 1; deg <= p.top_degree(); ++deg) {
        const IntMatrix& d = p.differential(deg);
        for (std::size_t col = 0; col < d.cols(); ++col) {
            const auto [fa, fb] = split(p.basis(deg)[col]);
            const int ca = codim_of(a_poset, fa);
            for (std::size_t row = 0; row < d.rows(); ++row) {
                const auto [ga, gb] = split(p.basis(deg - 1)[row]);
                Int expected = 0;
                if (gb == fb && codim_of(a_poset, ga) == ca - 1)
                    expected = entry(a, ca, ga, fa);
                else if (ga == fa && gb != fb)
                    expected = Int(ca % 2 == 0 ? 1 : -1) * entry(b, deg - ca, gb, fb);
                CHECK(d(row, col) == expected);
            }
        }
    }
}

TEST_CASE("matrix dump lists labels and rows") {
    const std::string dump = dump_matrices(build_complex(interval()));
    CHECK(dump == "D 1 1 2\nrows X\ncols H1 H2\n1 1\n");
}
