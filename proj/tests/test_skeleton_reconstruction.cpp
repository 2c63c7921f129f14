#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "skelrec/constructions.hpp"
#include "skelrec/isomorphism.hpp"
#include "skelrec/skeleton_reconstruction.hpp"

using namespace skelrec;

namespace {

using IdTriangle = std::pair<std::array<std::string, 3>, std::array<std::string, 3>>;

std::vector<IdTriangle> to_ids(const IncidenceBigraph& bg, const std::vector<TriangularSubset>& ts) {
    std::vector<IdTriangle> out;
    for (const auto& t : ts) {
        IdTriangle it;
        for (int i = 0; i < 3; ++i) {
            it.first[i] = bg.high()[t.a[i]];
            it.second[i] = bg.low()[t.b[i]];
        }
        out.push_back(std::move(it));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Reference enumeration straight from vertex-set combinatorics: highs are the
// triangles of the complex, lows its edges, containment is subset inclusion.
std::vector<IdTriangle> brute_triangles(const SimplicialComplex& x) {
    auto key = [](std::vector<std::string> toks) {
        std::sort(toks.begin(), toks.end());
        std::string s;
        for (std::size_t i = 0; i < toks.size(); ++i) s += (i ? "," : "") + toks[i];
        return s;
    };
    std::vector<std::pair<std::string, std::vector<int>>> tri, edg;
    for (const auto& f : x.faces_of_dim(2)) tri.emplace_back(key(x.tokens(f)), f);
    for (const auto& f : x.faces_of_dim(1)) edg.emplace_back(key(x.tokens(f)), f);
    std::sort(tri.begin(), tri.end());
    std::sort(edg.begin(), edg.end());
    auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    std::vector<IdTriangle> out;
    for (std::size_t a1 = 0; a1 < tri.size(); ++a1)
        for (std::size_t a2 = a1 + 1; a2 < tri.size(); ++a2)
            for (std::size_t a3 = a2 + 1; a3 < tri.size(); ++a3) {
                std::array<std::size_t, 3> as{a1, a2, a3};
                std::array<std::vector<std::size_t>, 3> choice;
                for (int i = 0; i < 3; ++i)
                    for (std::size_t e = 0; e < edg.size(); ++e)
                        if (contains(tri[as[(i + 1) % 3]].second, edg[e].second) &&
                            contains(tri[as[(i + 2) % 3]].second, edg[e].second) &&
                            !contains(tri[as[i]].second, edg[e].second))
                            choice[i].push_back(e);
                for (auto b1 : choice[0])
                    for (auto b2 : choice[1])
                        for (auto b3 : choice[2])
                            out.push_back({{tri[a1].first, tri[a2].first, tri[a3].first},
                                           {edg[b1].first, edg[b2].first, edg[b3].first}});
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("triangular subsets match the subset-inclusion enumeration") {
    for (const char* name : {"simplex:4", "crosspoly:4"}) {
        auto x = *standard_fixture(name).complex;
        auto bg = bigraph_of(slice(face_poset(x), 1, 2));
        CHECK(to_ids(bg, triangular_subsets(bg)) == brute_triangles(x));
    }
}

TEST_CASE("triangle classes of the 4-simplex boundary are its vertices") {
    auto x = simplex_boundary(4);
    auto bg = bigraph_of(slice(face_poset(x), 1, 2));
    auto ts = triangular_subsets(bg);
    auto classes = triangle_classes(ts);
    REQUIRE(classes.size() == 5);

    std::set<std::string> seen;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        CHECK(classes[c].id == "c" + std::to_string(c));
        // every member triple of k-faces meets in the same single vertex
        std::set<std::string> inter;
        std::set<std::string> walls;
        for (int t : classes[c].members) {
            std::set<std::string> common;
            for (int i = 0; i < 3; ++i) {
                std::set<std::string> vs;
                for (char ch : bg.high()[ts[t].a[i]])
                    if (ch != ',') vs.insert(std::string(1, ch));
                if (i == 0)
                    common = vs;
                else {
                    std::set<std::string> keep;
                    for (const auto& v : common)
                        if (vs.count(v)) keep.insert(v);
                    common = keep;
                }
            }
            REQUIRE(common.size() == 1);
            inter.insert(*common.begin());
            for (int i = 0; i < 3; ++i) walls.insert(bg.low()[ts[t].b[i]]);
        }
        CHECK(inter.size() == 1);
        CHECK(seen.insert(*inter.begin()).second);
        // walls of the class = edges at that vertex
        std::set<std::string> expect;
        for (const auto& e : bg.low())
            if (e.find(*inter.begin()) != std::string::npos) expect.insert(e);
        CHECK(walls == expect);
    }
    CHECK(seen.size() == 5);
}

TEST_CASE("one downward step rebuilds the vertex-edge layer up to isomorphism") {
    auto truth = face_poset(simplex_boundary(4));
    auto ext = extend_one_down(bigraph_of(slice(truth, 1, 2)), 4);
    CHECK(ext.low_rank() == 0);
    CHECK(ext.low().size() == 5);
    CHECK(ext.high().size() == 10);
    CHECK(ext.pairs().size() == 20);
    CHECK(bigraph_isomorphic(ext, bigraph_of(slice(truth, 0, 1))).isomorphic());
}

TEST_CASE("downward step rank preconditions") {
    auto truth = face_poset(simplex_boundary(4));
    CHECK_THROWS_AS(extend_one_down(bigraph_of(slice(truth, 1, 2)), 3), std::out_of_range);
    CHECK_THROWS_AS(extend_one_down(bigraph_of(slice(truth, 0, 1)), 5), std::out_of_range);
}

TEST_CASE("skeleton reconstruction round trips") {
    for (const char* name : {"simplex:4", "crosspoly:4"}) {
        auto x = *standard_fixture(name).complex;
        auto truth = face_poset(x);
        auto rec = reconstruct_skeleton(bigraph_of(slice(truth, 1, 2)), 2, 4);
        std::vector<std::vector<std::string>> skel;
        for (const auto& f : x.faces_of_dim(2)) skel.push_back(x.tokens(f));
        auto expect = SimplicialComplex::from_facets(skel);
        CHECK(rec.f_vector() == expect.f_vector());
        auto res = complex_isomorphic(rec, expect);
        REQUIRE(res.isomorphic());
        CHECK(verify_complex_witness(rec, expect, res.witness));
    }
}

TEST_CASE("skeleton reconstruction at k = 1 returns the graph unchanged") {
    auto truth = face_poset(simplex_boundary(4));
    auto rec = reconstruct_skeleton(bigraph_of(slice(truth, 0, 1)), 1, 4);
    std::vector<std::vector<std::string>> edges;
    auto x = simplex_boundary(4);
    for (const auto& f : x.faces_of_dim(1)) edges.push_back(x.tokens(f));
    CHECK(rec == SimplicialComplex::from_facets(edges));
}

TEST_CASE("skeleton reconstruction argument validation") {
    auto truth = face_poset(simplex_boundary(4));
    auto b12 = bigraph_of(slice(truth, 1, 2));
    CHECK_THROWS_AS(reconstruct_skeleton(b12, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_skeleton(b12, 2, 3), std::out_of_range);
    CHECK_THROWS_AS(reconstruct_skeleton(b12, 0, 4), std::out_of_range);
}

TEST_CASE("class separation diagnostic on engineered overlapping classes") {
    // Two wall classes whose wall sets share w2 and w4 without any triangle
    // joining them: the first spans the X and Y columns, the second the Z
    // column.  w4 additionally sits under X1 and X3 to starve every mixed
    // X-Y-Z triple of a valid wall assignment.
    std::vector<std::pair<std::string, std::string>> pairs;
    auto put = [&](const std::string& w, std::initializer_list<const char*> highs) {
        for (const char* h : highs) pairs.emplace_back(w, h);
    };
    put("w1", {"X2", "X3", "Y2", "Y3"});
    put("w2", {"X1", "X3", "Z2", "Z3"});
    put("w3", {"X1", "X2", "Y1", "Y3"});
    put("w4", {"X1", "X3", "Y1", "Y2", "Z1", "Z3"});
    put("w5", {"Z1", "Z2"});
    IncidenceBigraph bg(1, {"w1", "w2", "w3", "w4", "w5"},
                        {"X1", "X2", "X3", "Y1", "Y2", "Y3", "Z1", "Z2", "Z3"}, pairs);

    auto classes = triangle_classes(triangular_subsets(bg));
    REQUIRE(classes.size() == 2);
    try {
        extend_one_down(bg, 4);
        FAIL("expected a class-separation diagnostic");
    } catch (const ReconstructionError& e) {
        CHECK(e.code() == "class-separation");
    }
}

TEST_CASE("duplicated face is reported as a structural failure") {
    auto truth = face_poset(simplex_boundary(4));
    auto b = bigraph_of(slice(truth, 1, 2));
    auto pairs = b.pairs_by_id();
    for (int e : b.lows_of_high(b.high_index("1,2,3"))) pairs.emplace_back(b.low()[e], "dup");
    auto highs = b.high();
    highs.push_back("dup");
    IncidenceBigraph corrupted(1, b.low(), highs, pairs);
    try {
        reconstruct_skeleton(corrupted, 2, 4);
        FAIL("expected a skeleton-structure diagnostic");
    } catch (const ReconstructionError& e) {
        CHECK(e.code() == "skeleton-structure");
    }
}

TEST_CASE("a dropped incidence cannot slip through") {
    auto truth = face_poset(simplex_boundary(4));
    auto b = bigraph_of(slice(truth, 1, 2));
    auto pairs = b.pairs_by_id();
    pairs.erase(std::find(pairs.begin(), pairs.end(), std::pair<std::string, std::string>{"1,2", "1,2,3"}));
    IncidenceBigraph corrupted(1, b.low(), b.high(), pairs);
    CHECK_THROWS_AS(reconstruct_skeleton(corrupted, 2, 4), ReconstructionError);
}
