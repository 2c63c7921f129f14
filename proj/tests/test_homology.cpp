#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "skelrec/constructions.hpp"
#include "skelrec/homology.hpp"

using namespace skelrec;

namespace {

// Naive elimination over int vectors, kept deliberately separate from the
// packed-word implementation under test.
int rank_oracle(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<std::vector<int>> unpack(const Z2Matrix& z) {
    std::vector<std::vector<int>> m(z.rows(), std::vector<int>(z.cols(), 0));
    for (std::size_t r = 0; r < z.rows(); ++r)
        for (std::size_t c = 0; c < z.cols(); ++c) m[r][c] = z.get(r, c);
    return m;
}

BettiVector betti_oracle(const SimplicialComplex& x) {
    int d = x.dim();
    auto f = x.f_vector();
    std::vector<int> rk(d + 2, 0);
    for (int i = 1; i <= d; ++i) rk[i] = rank_oracle(unpack(boundary_matrix(x, i)));
    BettiVector b(d + 1);
    for (int i = 0; i <= d; ++i) b[i] = f[i] - rk[i] - rk[i + 1];
    return b;
}

}  // namespace

TEST_CASE("packed rank agrees with the naive eliminator on random matrices") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 90;
        Z2Matrix z(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() & 1) z.set(r, c, true);
        CHECK(static_cast<int>(z.rank()) == rank_oracle(unpack(z)));
    }
    CHECK(Z2Matrix(0, 5).rank() == 0);
    CHECK(Z2Matrix(5, 0).rank() == 0);
}

TEST_CASE("boundary matrix shapes and the chain condition") {
    auto s4 = simplex_boundary(4);
    CHECK(boundary_matrix(s4, 0).rows() == 0);
    CHECK(boundary_matrix(s4, 0).cols() == 5);
    auto d1 = boundary_matrix(s4, 1);
    CHECK(d1.rows() == 5);
    CHECK(d1.cols() == 10);
    for (int i = 1; i < s4.dim(); ++i) {
        auto a = boundary_matrix(s4, i);
        auto b = boundary_matrix(s4, i + 1);
        CHECK(a.multiplied(b).is_zero());
    }
    CHECK_THROWS_AS(boundary_matrix(s4, 4), std::out_of_range);
    CHECK_THROWS_AS(boundary_matrix(s4, -1), std::out_of_range);
}

TEST_CASE("betti numbers of the standard examples") {
    CHECK(betti(simplex_boundary(4)) == BettiVector{1, 0, 0, 1});
    CHECK(betti(simplex_boundary(4)) == betti_oracle(simplex_boundary(4)));

    // hexagon = S^1
    auto hexagon = SimplicialComplex::from_facets(
        {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"1", "6"}});
    CHECK(betti(hexagon) == BettiVector{1, 1});

    // two disjoint triangle boundaries: unreduced b0 counts components
    auto two = SimplicialComplex::from_facets(
        {{"1", "2"}, {"2", "3"}, {"1", "3"}, {"4", "5"}, {"5", "6"}, {"4", "6"}});
    CHECK(betti(two) == BettiVector{2, 2});

    // projective plane over GF(2)
    CHECK(betti(projective_plane_6()) == BettiVector{1, 1, 1});
    CHECK(betti(projective_plane_6()) == betti_oracle(projective_plane_6()));

    // lone point
    CHECK(betti(SimplicialComplex::from_facets({{"a"}})) == BettiVector{1});

    CHECK(sphere_betti(0) == BettiVector{2});
    CHECK(sphere_betti(3) == BettiVector{1, 0, 0, 1});
}

TEST_CASE("homology manifold check accepts spheres, rejects the pinched pair") {
    CHECK(is_homology_manifold(simplex_boundary(3)).pass);
    CHECK(is_homology_manifold(cross_polytope_boundary(3)).pass);

    auto c = is_homology_manifold(pinched_spheres());
    CHECK(c.connected);
    CHECK(c.pseudomanifold);
    CHECK_FALSE(c.pass);
    int failures = 0;
    for (const auto& lc : c.checked)
        if (!lc.pass) {
            ++failures;
            REQUIRE(lc.face == std::vector<std::string>{"p"});
            // glue-vertex link: two disjoint triangle boundaries
            CHECK(lc.betti == BettiVector{2, 2});
        }
    CHECK(failures == 1);

    // projective plane: every link is a cycle, so it passes over GF(2)
    CHECK(is_homology_manifold(projective_plane_6()).pass);
}

TEST_CASE("reconstruction hypothesis battery") {
    auto x5 = cross_polytope_boundary(5);
    auto rep = check_pseudomanifold_hypotheses(x5, 5, 3);
    CHECK(rep.normality.normal);
    CHECK(rep.links_pass);
    CHECK(rep.pass);
    // d=5, k=3: 0-face links, one entry per vertex
    CHECK(rep.links.size() == 10);
    for (const auto& lc : rep.links) CHECK(lc.betti == sphere_betti(3));
    CHECK(rep.variant_applicable);
    CHECK(rep.variant_pass);
    CHECK(rep.variant_links.size() == 40);  // one per edge

    CHECK_THROWS_AS(check_pseudomanifold_hypotheses(x5, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(check_pseudomanifold_hypotheses(x5, 5, 2), std::out_of_range);
    CHECK_THROWS_AS(check_pseudomanifold_hypotheses(x5, 5, 4), std::out_of_range);
}
