#pragma once

// Recovering a 4-polytope's face lattice from its edge-ridge incidences.
//
// A facet's boundary shows up in the edge-ridge bigraph as a connected set of
// ridges covering each of its edges exactly twice, whose incidence subgraph
// and complement subgraph are both connected.  Candidates are enumerated by a
// seed-and-grow walk: starting from each ridge, always extend at the least
// edge covered exactly once, never letting any edge reach three covers.
// Inside a closed connected target every extension is forced to stay, and a
// closed proper subset of a connected closed set cannot occur, so the walk
// finds every candidate.  Vertices come from the same search on the
// transposed bigraph, and the two results are stitched into a rank 0..3
// lattice with minted ids.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bits.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "poset.hpp"

namespace skelrec {

struct CandidateFacet {
    std::vector<int> ridges;  // indices into the bigraph's high side, ascending
    std::vector<int> edges;   // the edges those ridges cover, ascending
    friend bool operator==(const CandidateFacet&, const CandidateFacet&) = default;
    friend bool operator<(const CandidateFacet& a, const CandidateFacet& b) {
        return a.ridges < b.ridges;
    }
};

inline std::vector<std::string> candidate_ridge_ids(const IncidenceBigraph& b,
                                                    const CandidateFacet& c) {
    std::vector<std::string> out;
    out.reserve(c.ridges.size());
    for (int r : c.ridges) out.push_back(b.high()[r]);
    return out;
}

inline std::vector<std::string> candidate_edge_ids(const IncidenceBigraph& b,
                                                   const CandidateFacet& c) {
    std::vector<std::string> out;
    out.reserve(c.edges.size());
    for (int e : c.edges) out.push_back(b.low()[e]);
    return out;
}

// All connected ridge sets covering each touched edge exactly twice, each at
// most `max_candidate` ridges large.  Deterministic: candidates are sorted by
// their ridge index set.
inline std::vector<CandidateFacet> closed_candidates(const IncidenceBigraph& b,
                                                     std::size_t max_candidate = SIZE_MAX) {
    if (b.low_rank() != 1)
        throw std::invalid_argument("closed_candidates: expected an edge-ridge bigraph (low rank 1)");
    std::set<std::vector<int>> found;
    std::size_t nr = b.high().size(), ne = b.low().size();
    if (nr == 0) return {};
    std::vector<char> chosen(nr, 0);
    std::vector<std::uint8_t> cover(ne, 0);
    std::set<int> once;
    std::vector<int> stack;

    auto add = [&](int r) {
        chosen[r] = 1;
        stack.push_back(r);
        for (int e : b.lows_of_high(r)) {
            if (++cover[e] == 1)
                once.insert(e);
            else
                once.erase(e);
        }
    };
    auto remove = [&](int r) {
        chosen[r] = 0;
        stack.pop_back();
        for (int e : b.lows_of_high(r)) {
            if (--cover[e] == 1)
                once.insert(e);
            else
                once.erase(e);
        }
    };
    auto can_add = [&](int r) {
        if (chosen[r] || stack.size() >= max_candidate) return false;
        for (int e : b.lows_of_high(r))
            if (cover[e] >= 2) return false;
        return true;
    };
    auto dfs = [&](auto&& self) -> void {
        if (once.empty()) {
            std::vector<int> c = stack;
            std::sort(c.begin(), c.end());
            found.insert(std::move(c));
            return;
        }
        int e = *once.begin();
        for (int r : b.highs_of_low(e)) {
            if (!can_add(r)) continue;
            add(r);
            self(self);
            remove(r);
        }
    };
    for (std::size_t seed = 0; seed < nr; ++seed) {
        add(static_cast<int>(seed));
        dfs(dfs);
        remove(static_cast<int>(seed));
    }
    std::vector<CandidateFacet> out;
    for (const auto& ridges : found) {
        CandidateFacet c;
        c.ridges = ridges;
        std::set<int> es;
        for (int r : ridges)
            for (int e : b.lows_of_high(r)) es.insert(e);
        c.edges.assign(es.begin(), es.end());
        out.push_back(std::move(c));
    }
    return out;
}

// Connectivity filter on closed candidates: the candidate's own edge/ridge
// incidence graph must be connected, and so must the subgraph
// induced by everything outside the candidate.  An empty complement counts as
// disconnected.
inline bool is_facet_boundary(const IncidenceBigraph& b, const CandidateFacet& c) {
    if (c.ridges.empty()) return false;
    std::size_t ne = b.low().size(), nr = b.high().size();
    std::vector<char> in_r(nr, 0), in_e(ne, 0);
    for (int r : c.ridges) in_r[r] = 1;
    for (int e : c.edges) in_e[e] = 1;

    auto connected = [&](const std::vector<int>& edges, const std::vector<int>& ridges,
                         const std::vector<char>& emem, const std::vector<char>& rmem) {
        std::size_t n = edges.size() + ridges.size();
        if (n == 0) return false;
        std::vector<int> eid(ne, -1), rid(nr, -1);
        for (std::size_t i = 0; i < edges.size(); ++i) eid[edges[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < ridges.size(); ++i)
            rid[ridges[i]] = static_cast<int>(edges.size() + i);
        detail::UnionFind uf(n);
        std::size_t merges = 0;
        for (int r : ridges)
            for (int e : b.lows_of_high(r))
                if (emem[e]) merges += uf.unite(rid[r], eid[e]) ? 1 : 0;
        return merges == n - 1;
    };

    std::vector<int> oe, orr;
    for (std::size_t e = 0; e < ne; ++e)
        if (!in_e[e]) oe.push_back(static_cast<int>(e));
    for (std::size_t r = 0; r < nr; ++r)
        if (!in_r[r]) orr.push_back(static_cast<int>(r));
    std::vector<char> out_e(ne, 0), out_r(nr, 0);
    for (int e : oe) out_e[e] = 1;
    for (int r : orr) out_r[r] = 1;
    return connected(c.edges, c.ridges, in_e, in_r) && connected(oe, orr, out_e, out_r);
}

// Candidates that survive the connectivity filter.  On genuine 3-sphere
// edge-ridge data every ridge ends up in exactly two survivors; anything else
// is reported as a diagnostic failure.
inline std::vector<CandidateFacet> find_facets(const IncidenceBigraph& b,
                                               std::size_t max_candidate = SIZE_MAX) {
    std::vector<CandidateFacet> out;
    for (auto& c : closed_candidates(b, max_candidate))
        if (is_facet_boundary(b, c)) out.push_back(std::move(c));
    std::vector<int> coverage(b.high().size(), 0);
    for (const auto& c : out)
        for (int r : c.ridges) coverage[r]++;
    for (std::size_t r = 0; r < coverage.size(); ++r)
        if (coverage[r] != 2)
            throw ReconstructionError(
                "ridge-coverage", "input is not the edge-ridge incidence of a 3-sphere",
                {{"ridge", b.high()[r]}, {"facet_count", std::to_string(coverage[r])}});
    return out;
}

struct ReconstructedLattice {
    GradedFacePoset lattice;  // ranks 0..3: vertices, edges, ridges, facets
    struct Provenance {
        std::vector<std::string> ridges;  // for facets: ridges below; for vertices: ridges above
        std::vector<std::string> edges;
    };
    std::map<std::string, Provenance> provenance;  // minted id -> defining candidate
};

namespace detail {

// Mint `count` ids "<prefix>0", "<prefix>1", ...; tilde-prefix the stem as
// needed so no minted id collides with an existing one.
inline std::vector<std::string> mint_ids(const std::string& prefix, std::size_t count,
                                         const std::set<std::string>& taken) {
    std::string stem = prefix;
    while (true) {
        bool clash = false;
        for (std::size_t i = 0; i < count && !clash; ++i)
            clash = taken.count(stem + std::to_string(i)) != 0;
        if (!clash) break;
        stem = "~" + stem;
    }
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

}  // namespace detail

// Full lattice from the edge-ridge bigraph: facets from the primal search,
// vertices from the dual (transposed) search, Euler check at the end.
inline ReconstructedLattice reconstruct_4polytope(const IncidenceBigraph& b,
                                                  std::size_t max_candidate = SIZE_MAX) {
    auto facets = find_facets(b, max_candidate);
    // transpose with the ridge/edge roles swapped; index spaces carry over
    // because both id lists are already sorted
    IncidenceBigraph bd = transposed(b, 1);
    std::vector<CandidateFacet> verts;
    try {
        verts = find_facets(bd, max_candidate);
    } catch (const ReconstructionError& e) {
        throw ReconstructionError("dual-" + e.code(),
                                  std::string("dual search failed: ") + e.what(), e.detail());
    }
    std::set<std::string> taken(b.low().begin(), b.low().end());
    taken.insert(b.high().begin(), b.high().end());
    auto vids = detail::mint_ids("v", verts.size(), taken);
    for (const auto& id : vids) taken.insert(id);
    auto fids = detail::mint_ids("f", facets.size(), taken);

    std::vector<PosetElement> elems;
    for (std::size_t i = 0; i < vids.size(); ++i) elems.push_back({vids[i], 0});
    for (const auto& id : b.low()) elems.push_back({id, 1});
    for (const auto& id : b.high()) elems.push_back({id, 2});
    for (std::size_t i = 0; i < fids.size(); ++i) elems.push_back({fids[i], 3});

    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (int e : verts[i].ridges)  // dual ridges are primal edges
            covers.emplace_back(vids[i], bd.high()[e]);
    for (auto [e, r] : b.pairs()) covers.emplace_back(b.low()[e], b.high()[r]);
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (int r : facets[i].ridges) covers.emplace_back(b.high()[r], fids[i]);

    long long chi = static_cast<long long>(verts.size()) - static_cast<long long>(b.low().size()) +
                    static_cast<long long>(b.high().size()) - static_cast<long long>(facets.size());
    if (chi != 0)
        throw ReconstructionError("euler", "reconstructed face counts violate Euler's relation",
                                  {{"f0", std::to_string(verts.size())},
                                   {"f1", std::to_string(b.low().size())},
                                   {"f2", std::to_string(b.high().size())},
                                   {"f3", std::to_string(facets.size())},
                                   {"chi", std::to_string(chi)}});

    ReconstructedLattice out;
    out.lattice = GradedFacePoset(std::move(elems), covers);
    for (std::size_t i = 0; i < facets.size(); ++i)
        out.provenance.emplace(fids[i],
                               ReconstructedLattice::Provenance{candidate_ridge_ids(b, facets[i]),
                                                                candidate_edge_ids(b, facets[i])});
    for (std::size_t i = 0; i < verts.size(); ++i)
        out.provenance.emplace(vids[i],
                               ReconstructedLattice::Provenance{candidate_edge_ids(bd, verts[i]),
                                                                candidate_ridge_ids(bd, verts[i])});
    return out;
}

}  // namespace skelrec
