#pragma once

// Downward skeleton reconstruction for simplicial pseudomanifolds: given the
// incidences between (k-1)-faces and k-faces, recover the faces two ranks
// down from "triangular subsets" and iterate until the vertex layer, then
// reassemble the k-skeleton.
//
// A triangular subset is six faces (A1,A2,A3; B1,B2,B3): the A's are k-faces,
// each B_i lies under the two A_j with j != i but not under A_i.  Its
// signature is the common intersection A1^A2^A3, a (k-2)-face; two triangles
// describe the same (k-2)-face exactly when they share two B's, so classes of
// the induced union-find are the (k-2)-faces and a class is incident to the
// B's of its members.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bits.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "poset.hpp"
#include "sphere_reconstruction.hpp"

namespace skelrec {

struct TriangularSubset {
    std::array<int, 3> a;  // k-face (high) indices, strictly ascending
    std::array<int, 3> b;  // wall (low) indices, aligned: b[i] avoids a[i]
    friend bool operator==(const TriangularSubset&, const TriangularSubset&) = default;
    friend auto operator<=>(const TriangularSubset&, const TriangularSubset&) = default;
};

// Exhaustive and deterministic: A-triples in ascending lexicographic order,
// all valid B assignments for each.
inline std::vector<TriangularSubset> triangular_subsets(const IncidenceBigraph& bg) {
    std::size_t nh = bg.high().size();
    std::vector<Bitset> lows_of(nh, Bitset(bg.low().size()));
    for (auto [lo, hi] : bg.pairs()) lows_of[hi].set(lo);
    // adjacency between highs = sharing at least one low
    std::vector<Bitset> adj(nh, Bitset(nh));
    for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (lows_of[i].intersects(lows_of[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }
    std::vector<TriangularSubset> out;
    for (int a1 = 0; a1 < static_cast<int>(nh); ++a1)
        for (int a2 = a1 + 1; a2 < static_cast<int>(nh); ++a2) {
            if (!adj[a1].test(a2)) continue;
            Bitset both = adj[a1] & adj[a2];
            both.for_each_set([&](std::size_t a3u) {
                int a3 = static_cast<int>(a3u);
                if (a3 <= a2) return;
                // b[i] must lie under the two other a's and avoid a[i]
                std::array<std::vector<int>, 3> choice;
                std::array<int, 3> as{a1, a2, a3};
                for (int i = 0; i < 3; ++i) {
                    Bitset shared = lows_of[as[(i + 1) % 3]] & lows_of[as[(i + 2) % 3]];
                    shared.for_each_set([&](std::size_t lo) {
                        if (!lows_of[as[i]].test(lo)) choice[i].push_back(static_cast<int>(lo));
                    });
                }
                for (int b1 : choice[0])
                    for (int b2 : choice[1])
                        for (int b3 : choice[2])
                            out.push_back(TriangularSubset{as, {b1, b2, b3}});
            });
        }
    std::sort(out.begin(), out.end());
    return out;
}

struct TriangleClass {
    std::string id;            // canonical: "c<ordinal>" with classes ordered by least member
    std::vector<int> members;  // triangle indices, ascending
};

// Union-find over triangles keyed by unordered B-pairs.
inline std::vector<TriangleClass> triangle_classes(const std::vector<TriangularSubset>& ts) {
    detail::UnionFind uf(ts.size());
    std::map<std::pair<int, int>, int> pair_owner;
    for (std::size_t t = 0; t < ts.size(); ++t) {
        const auto& b = ts[t].b;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                auto key = std::minmax(b[i], b[j]);
                auto [it, fresh] = pair_owner.emplace(key, static_cast<int>(t));
                if (!fresh) uf.unite(it->second, static_cast<int>(t));
            }
    }
    std::map<int, std::vector<int>> groups;
    for (std::size_t t = 0; t < ts.size(); ++t) groups[uf.find(static_cast<int>(t))].push_back(static_cast<int>(t));
    std::vector<TriangleClass> out;
    for (auto& [root, members] : groups) {
        TriangleClass c;
        c.members = std::move(members);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const TriangleClass& x, const TriangleClass& y) {
        return x.members.front() < y.members.front();
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].id = "c" + std::to_string(i);
    return out;
}

// One downward step: from the (k-1, k) incidences build the (k-2, k-1)
// layer.  `claimed_d` is the dimension claim for the underlying complex; the
// step is only justified for 2 <= k <= claimed_d - 2 (so claimed_d >= 4).
inline IncidenceBigraph extend_one_down(const IncidenceBigraph& b, int claimed_d) {
    int k = b.low_rank() + 1;
    if (k < 2 || k > claimed_d - 2)
        throw std::out_of_range("extend_one_down: k = " + std::to_string(k) +
                                " outside [2, d-2] for claimed d = " + std::to_string(claimed_d));
    auto ts = triangular_subsets(b);
    auto classes = triangle_classes(ts);
    // incident walls of a class: every B of every member triangle
    std::vector<Bitset> walls(classes.size(), Bitset(b.low().size()));
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int t : classes[c].members)
            for (int w : ts[t].b) walls[c].set(w);
    // distinct faces two ranks apart share at most one intermediate face
    for (std::size_t c1 = 0; c1 < classes.size(); ++c1)
        for (std::size_t c2 = 0; c2 < c1; ++c2) {
            Bitset common = walls[c1] & walls[c2];
            if (common.count() >= 2)
                throw ReconstructionError(
                    "class-separation",
                    "two reconstructed faces share two cofaces; input violates the "
                    "simplicial reconstruction hypotheses",
                    {{"class_a", classes[c2].id}, {"class_b", classes[c1].id}});
        }
    std::set<std::string> taken(b.low().begin(), b.low().end());
    taken.insert(b.high().begin(), b.high().end());
    auto ids = detail::mint_ids("r" + std::to_string(b.low_rank() - 1) + ".", classes.size(), taken);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t c = 0; c < classes.size(); ++c)
        walls[c].for_each_set([&](std::size_t w) { pairs.emplace_back(ids[c], b.low()[w]); });
    return IncidenceBigraph(b.low_rank() - 1, ids, b.low(), pairs);
}

// Iterate extend_one_down to the vertex layer, reassemble ranks 0..k, check
// that the result is the face system of a simplicial k-skeleton, and emit it
// as a complex whose facets are the k-faces.  For k = 1 the input already is
// the vertex-edge graph and is returned as a complex directly.
inline SimplicialComplex reconstruct_skeleton(const IncidenceBigraph& b, int k, int claimed_d) {
    if (k < 1 || k > claimed_d - 2)
        throw std::out_of_range("reconstruct_skeleton: k outside [1, d-2] for claimed d = " +
                                std::to_string(claimed_d));
    if (b.low_rank() != k - 1)
        throw std::invalid_argument("reconstruct_skeleton: bigraph low rank must be k-1");
    std::vector<IncidenceBigraph> layers{b};
    while (layers.front().low_rank() > 0)
        layers.insert(layers.begin(), extend_one_down(layers.front(), claimed_d));
    GradedFacePoset poset = assemble(layers);

    auto below = poset.down_closures();
    std::size_t n = poset.size();
    int nverts = 0;
    while (nverts < static_cast<int>(n) && poset.element(nverts).rank == 0) ++nverts;
    // vertex set of each face = rank-0 elements weakly below it
    std::vector<Bitset> vsets(n, Bitset(nverts));
    for (std::size_t i = 0; i < n; ++i) {
        if (poset.element(static_cast<int>(i)).rank == 0) {
            vsets[i].set(i);
            continue;
        }
        below[i].for_each_set([&](std::size_t j) {
            if (poset.element(static_cast<int>(j)).rank == 0) vsets[i].set(j);
        });
    }
    auto fail = [&](const std::string& why, const std::string& id) {
        throw ReconstructionError("skeleton-structure",
                                  "reconstructed poset is not a simplicial k-skeleton: " + why,
                                  {{"face", id}});
    };
    for (std::size_t i = 0; i < n; ++i) {
        int r = poset.element(static_cast<int>(i)).rank;
        if (static_cast<int>(vsets[i].count()) != r + 1)
            fail("face of rank " + std::to_string(r) + " has " + std::to_string(vsets[i].count()) +
                     " vertices",
                 poset.element(static_cast<int>(i)).id);
    }
    {
        std::set<std::pair<int, Bitset>> distinct;
        for (std::size_t i = 0; i < n; ++i)
            if (!distinct.emplace(poset.element(static_cast<int>(i)).rank, vsets[i]).second)
                fail("two faces share one vertex set", poset.element(static_cast<int>(i)).id);
    }
    // containment must agree with the vertex sets in both directions
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            bool le = below[j].test(i);
            bool sub = vsets[i].is_subset_of(vsets[j]) && vsets[i] != vsets[j];
            if (le != sub)
                fail("containment disagrees with vertex sets between '" +
                         poset.element(static_cast<int>(i)).id + "' and '" +
                         poset.element(static_cast<int>(j)).id + "'",
                     poset.element(static_cast<int>(i)).id);
        }
    // every face must sit under some k-face
    std::vector<char> under_top(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (poset.element(static_cast<int>(i)).rank == k) {
            under_top[i] = 1;
            below[i].for_each_set([&](std::size_t j) { under_top[j] = 1; });
        }
    for (std::size_t i = 0; i < n; ++i)
        if (!under_top[i]) fail("face lies under no k-face", poset.element(static_cast<int>(i)).id);

    std::vector<std::vector<std::string>> facets;
    for (std::size_t i = 0; i < n; ++i) {
        if (poset.element(static_cast<int>(i)).rank != k) continue;
        std::vector<std::string> f;
        vsets[i].for_each_set(
            [&](std::size_t j) { f.push_back(poset.element(static_cast<int>(j)).id); });
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

}  // namespace skelrec
