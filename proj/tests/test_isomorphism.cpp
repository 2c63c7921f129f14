#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "skelrec/constructions.hpp"
#include "skelrec/isomorphism.hpp"

using namespace skelrec;

namespace {

SimplicialComplex relabel(const SimplicialComplex& x, const std::map<std::string, std::string>& m) {
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : x.facets()) {
        std::vector<std::string> g;
        for (int v : f) g.push_back(m.at(x.vertex(v)));
        facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(facets);
}

GradedFacePoset relabel(const GradedFacePoset& p, const std::map<std::string, std::string>& m) {
    std::vector<PosetElement> elems;
    for (const auto& e : p.elements()) elems.push_back({m.at(e.id), e.rank});
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& [a, b] : p.covers_by_id()) covers.emplace_back(m.at(a), m.at(b));
    return GradedFacePoset(elems, covers);
}

std::map<std::string, std::string> shuffle_map(const std::vector<std::string>& ids,
                                               std::mt19937_64& rng) {
    auto shuffled = ids;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < ids.size(); ++i) m[ids[i]] = "n" + std::to_string(i) + "_" + shuffled[i];
    return m;
}

}  // namespace

TEST_CASE("posets: shuffled relabelings are isomorphic with verified witnesses") {
    auto p = face_poset(cross_polytope_boundary(3));
    std::mt19937_64 rng(7);
    std::vector<std::string> ids;
    for (const auto& e : p.elements()) ids.push_back(e.id);
    for (int trial = 0; trial < 3; ++trial) {
        auto q = relabel(p, shuffle_map(ids, rng));
        auto res = poset_isomorphic(p, q);
        REQUIRE(res.isomorphic());
        CHECK(verify_poset_witness(p, q, res.witness));
    }
}

TEST_CASE("posets: octahedron vs stacked sphere, same f-vector, different lattice") {
    auto a = face_poset(cross_polytope_boundary(3));
    auto b = face_poset(stacked_sphere_6());
    REQUIRE(a.f_vector() == b.f_vector());
    auto res = poset_isomorphic(a, b);
    CHECK_FALSE(res.isomorphic());
    CHECK_FALSE(res.refuter.invariant.empty());
    // rank-k antichains alone cannot tell them apart
    for (int k = 0; k <= 2; ++k) {
        auto sa = slice(a, k, k).poset;
        auto sb = slice(b, k, k).poset;
        CHECK(poset_isomorphic(sa, sb).isomorphic());
    }
}

TEST_CASE("poset refuters name an invariant") {
    auto p = face_poset(simplex_boundary(3));
    auto q = face_poset(simplex_boundary(4));
    auto res = poset_isomorphic(p, q);
    REQUIRE_FALSE(res.isomorphic());
    CHECK(res.refuter.invariant == "f-vector");
}

TEST_CASE("complexes: shift relabeling of the d=3 mod-3 torus is an isomorphism") {
    auto m = mod3_pseudomanifold(3);
    // (i, a) -> (i, a+1 mod 3) shifts every facet sum by 3 = 0, so at d = 3
    // it maps facets to facets and even fixes the complex as a labeled object
    std::map<std::string, std::string> shift;
    for (int i = 1; i <= 3; ++i)
        for (int a = 0; a < 3; ++a) shift[mod3_vertex(i, a)] = mod3_vertex(i, (a + 1) % 3);
    auto shifted = relabel(m, shift);
    CHECK(shifted == m);
    auto res = complex_isomorphic(m, shifted);
    REQUIRE(res.isomorphic());
    CHECK(verify_complex_witness(m, shifted, res.witness));
}

TEST_CASE("complexes: random relabelings round trip") {
    auto x = subdivided_pair(3).x;
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 3; ++trial) {
        auto y = relabel(x, shuffle_map(x.vertices(), rng));
        auto res = complex_isomorphic(x, y);
        REQUIRE(res.isomorphic());
        CHECK(verify_complex_witness(x, y, res.witness));
    }
}

TEST_CASE("complexes: the subdivided pair is never isomorphic") {
    auto pr = subdivided_pair(3);
    auto res = complex_isomorphic(pr.x, pr.y);
    CHECK_FALSE(res.isomorphic());
    CHECK_FALSE(res.refuter.invariant.empty());
}

TEST_CASE("exhausted search refutes the cycle vs two-triangles pair") {
    std::vector<std::vector<std::string>> c6, c33;
    for (int i = 0; i < 6; ++i)
        c6.push_back({"v" + std::to_string(i), "v" + std::to_string((i + 1) % 6)});
    for (int i = 0; i < 3; ++i) {
        c33.push_back({"a" + std::to_string(i), "a" + std::to_string((i + 1) % 3)});
        c33.push_back({"b" + std::to_string(i), "b" + std::to_string((i + 1) % 3)});
    }
    auto a = SimplicialComplex::from_facets(c6);
    auto b = SimplicialComplex::from_facets(c33);
    REQUIRE(a.f_vector() == b.f_vector());
    auto res = complex_isomorphic(a, b);
    CHECK_FALSE(res.isomorphic());
    CHECK(res.refuter.invariant == "exhausted search");
}

TEST_CASE("bigraphs compare as abstract two-level posets") {
    auto p = face_poset(simplex_boundary(3));
    auto a = bigraph_of(slice(p, 1, 2));
    auto b = transposed(transposed(a, 5), 3);  // same structure, different recorded rank
    CHECK(bigraph_isomorphic(a, b).isomorphic());
    IncidenceBigraph path(1, {"e1", "e2"}, {"t"}, {{"e1", "t"}, {"e2", "t"}});
    CHECK_FALSE(bigraph_isomorphic(a, path).isomorphic());
}

TEST_CASE("witness verifiers reject corrupted maps") {
    auto x = cross_polytope_boundary(3);
    auto res = complex_isomorphic(x, x);
    REQUIRE(res.isomorphic());
    auto bad = res.witness;
    // swap two images that break a facet
    bad[x.vertices()[0]] = res.witness.at(x.vertices()[1]);
    bad[x.vertices()[1]] = res.witness.at(x.vertices()[0]);
    // swapping +e1 with -e1's image may still be an automorphism; corrupt harder
    bad[x.vertices()[0]] = res.witness.at(x.vertices()[0]);
    bad[x.vertices()[1]] = res.witness.at(x.vertices()[0]);
    CHECK_FALSE(verify_complex_witness(x, x, bad));

    auto p = face_poset(x);
    auto pres = poset_isomorphic(p, p);
    REQUIRE(pres.isomorphic());
    auto pbad = pres.witness;
    pbad[p.element(0).id] = p.element(p.size() - 1).id;  // rank-breaking image
    CHECK_FALSE(verify_poset_witness(p, p, pbad));
}

TEST_CASE("empty structures are isomorphic") {
    CHECK(poset_isomorphic(GradedFacePoset(), GradedFacePoset()).isomorphic());
    CHECK(complex_isomorphic(SimplicialComplex(), SimplicialComplex()).isomorphic());
}
