#pragma once

// Isomorphism testing for graded posets, incidence bigraphs, and simplicial
// complexes.  One engine serves all three: nodes carry exact seed signatures,
// colors are refined by up/down neighbor multisets until stable, and
// remaining ties are broken by individualizing the smallest ambiguous class
// and backtracking.  Witnesses are re-verified structurally before being
// returned, and a refuter is either a named invariant with differing values
// or the exhausted search itself.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "poset.hpp"

namespace skelrec {

enum class IsoVerdict { Isomorphic, NotIsomorphic };

struct IsoRefuter {
    std::string invariant;  // e.g. "f-vector", "refined color histogram", "exhausted search"
    std::string lhs, rhs;   // printable values on each side, when applicable
};

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::NotIsomorphic;
    std::map<std::string, std::string> witness;  // left id -> right id
    IsoRefuter refuter;
    bool isomorphic() const { return verdict == IsoVerdict::Isomorphic; }
};

namespace detail {

struct IsoInstance {
    std::vector<std::vector<int>> up, down;
    std::vector<std::vector<long long>> seed;  // exact initial signature per node
    std::vector<std::string> ids;
};

inline std::string join_ints(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

class IsoEngine {
public:
    IsoEngine(const IsoInstance& a, const IsoInstance& b) : a_(a), b_(b) {}

    IsoResult run() {
        IsoResult res;
        if (a_.ids.size() != b_.ids.size()) {
            res.refuter = {"element count", std::to_string(a_.ids.size()),
                           std::to_string(b_.ids.size())};
            return res;
        }
        if (a_.ids.empty()) {
            res.verdict = IsoVerdict::Isomorphic;
            return res;
        }
        std::vector<int> ca, cb;
        if (!seed_colors(ca, cb, res.refuter)) return res;
        auto found = search(ca, cb);
        if (found) {
            res.verdict = IsoVerdict::Isomorphic;
            for (std::size_t i = 0; i < found->size(); ++i)
                res.witness.emplace(a_.ids[i], b_.ids[(*found)[i]]);
        } else {
            res.refuter = {"exhausted search",
                           "no color-respecting bijection preserves the relation", ""};
        }
        return res;
    }

private:
    // Initial coloring from the exact seed signatures, numbered jointly.
    bool seed_colors(std::vector<int>& ca, std::vector<int>& cb, IsoRefuter& ref) const {
        std::map<std::vector<long long>, int> num;
        for (const auto& s : a_.seed) num.emplace(s, 0);
        for (const auto& s : b_.seed) num.emplace(s, 0);
        int next = 0;
        for (auto& [sig, id] : num) id = next++;
        ca.resize(a_.seed.size());
        cb.resize(b_.seed.size());
        for (std::size_t i = 0; i < a_.seed.size(); ++i) ca[i] = num.at(a_.seed[i]);
        for (std::size_t i = 0; i < b_.seed.size(); ++i) cb[i] = num.at(b_.seed[i]);
        if (!histograms_match(ca, cb, next)) {
            ref = {"seed signature histogram", "differs", ""};
            return false;
        }
        return true;
    }

    static bool histograms_match(const std::vector<int>& ca, const std::vector<int>& cb,
                                 int ncolors) {
        std::vector<int> ha(ncolors, 0), hb(ncolors, 0);
        for (int c : ca) ha[c]++;
        for (int c : cb) hb[c]++;
        return ha == hb;
    }

    // One refinement pass; returns the new color count, or -1 when the two
    // sides develop different histograms (no isomorphism possible).
    static int refine_round(const IsoInstance& ia, const IsoInstance& ib, std::vector<int>& ca,
                            std::vector<int>& cb) {
        auto signature = [](const IsoInstance& inst, const std::vector<int>& col, std::size_t v) {
            std::vector<int> sig{col[v], -1};
            std::vector<int> nb;
            for (int u : inst.up[v]) nb.push_back(col[u]);
            std::sort(nb.begin(), nb.end());
            sig.insert(sig.end(), nb.begin(), nb.end());
            sig.push_back(-2);
            nb.clear();
            for (int u : inst.down[v]) nb.push_back(col[u]);
            std::sort(nb.begin(), nb.end());
            sig.insert(sig.end(), nb.begin(), nb.end());
            return sig;
        };
        std::map<std::vector<int>, int> num;
        std::vector<std::vector<int>> sa(ca.size()), sb(cb.size());
        for (std::size_t v = 0; v < ca.size(); ++v) num.emplace(sa[v] = signature(ia, ca, v), 0);
        for (std::size_t v = 0; v < cb.size(); ++v) num.emplace(sb[v] = signature(ib, cb, v), 0);
        int next = 0;
        for (auto& [sig, id] : num) id = next++;
        for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = num.at(sa[v]);
        for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = num.at(sb[v]);
        if (!histograms_match(ca, cb, next)) return -1;
        return next;
    }

    // Refine to a fixed point.  False = histogram mismatch.
    bool refine(std::vector<int>& ca, std::vector<int>& cb) const {
        int colors = *std::max_element(ca.begin(), ca.end()) + 1;
        while (true) {
            int next = refine_round(a_, b_, ca, cb);
            if (next < 0) return false;
            if (next == colors) return true;
            colors = next;
        }
    }

    std::optional<std::vector<int>> search(std::vector<int> ca, std::vector<int> cb) const {
        if (!refine(ca, cb)) return std::nullopt;
        int n = static_cast<int>(ca.size());
        // histogram per color to find the smallest non-singleton class
        std::map<int, int> count;
        for (int c : ca) count[c]++;
        int target = -1, target_size = n + 1;
        for (auto [c, k] : count)
            if (k > 1 && k < target_size) {
                target = c;
                target_size = k;
            }
        if (target < 0) {
            // discrete: match nodes color by color and verify
            std::map<int, int> bwhere;
            for (int v = 0; v < n; ++v) bwhere[cb[v]] = v;
            std::vector<int> map(n);
            for (int v = 0; v < n; ++v) map[v] = bwhere.at(ca[v]);
            return verify(map) ? std::optional<std::vector<int>>(map) : std::nullopt;
        }
        int va = -1;
        for (int v = 0; v < n; ++v)
            if (ca[v] == target) {
                va = v;
                break;
            }
        for (int vb = 0; vb < n; ++vb) {
            if (cb[vb] != target) continue;
            auto ca2 = ca;
            auto cb2 = cb;
            int fresh = 1 + *std::max_element(ca.begin(), ca.end());
            ca2[va] = fresh;
            cb2[vb] = fresh;
            if (auto m = search(std::move(ca2), std::move(cb2))) return m;
        }
        return std::nullopt;
    }

    bool verify(const std::vector<int>& map) const {
        std::set<std::pair<int, int>> bup;
        for (std::size_t v = 0; v < b_.up.size(); ++v)
            for (int u : b_.up[v]) bup.emplace(static_cast<int>(v), u);
        std::size_t edges_a = 0;
        for (std::size_t v = 0; v < a_.up.size(); ++v) {
            edges_a += a_.up[v].size();
            for (int u : a_.up[v])
                if (!bup.count({map[v], map[u]})) return false;
        }
        if (edges_a != bup.size()) return false;
        for (std::size_t v = 0; v < a_.seed.size(); ++v)
            if (a_.seed[v] != b_.seed[map[v]]) return false;
        return true;
    }

    const IsoInstance& a_;
    const IsoInstance& b_;
};

// Poset instance: seed = rank plus the per-rank profile of comparable
// elements, an invariant cheap to compute and hard to fool.
inline IsoInstance poset_instance(const GradedFacePoset& p) {
    IsoInstance inst;
    std::size_t n = p.size();
    inst.up.resize(n);
    inst.down.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        inst.up[i] = p.up(static_cast<int>(i));
        inst.down[i] = p.down(static_cast<int>(i));
    }
    inst.ids.reserve(n);
    for (const auto& e : p.elements()) inst.ids.push_back(e.id);
    auto below = p.down_closures();
    auto above = p.up_closures();
    int mr = p.max_rank();
    inst.seed.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long long> s{p.element(static_cast<int>(i)).rank};
        std::vector<long long> lo(mr + 1, 0), hi(mr + 1, 0);
        below[i].for_each_set([&](std::size_t j) { lo[p.element(static_cast<int>(j)).rank]++; });
        above[i].for_each_set([&](std::size_t j) { hi[p.element(static_cast<int>(j)).rank]++; });
        s.insert(s.end(), lo.begin(), lo.end());
        s.insert(s.end(), hi.begin(), hi.end());
        inst.seed[i] = std::move(s);
    }
    return inst;
}

inline IsoInstance complex_instance(const SimplicialComplex& x) {
    IsoInstance inst;
    std::size_t nv = x.vertices().size(), nf = x.facet_count();
    std::size_t n = nv + nf;
    inst.up.resize(n);
    inst.down.resize(n);
    inst.seed.resize(n);
    inst.ids.reserve(n);
    for (const auto& v : x.vertices()) inst.ids.push_back(v);
    for (std::size_t f = 0; f < nf; ++f) inst.ids.push_back("#facet" + std::to_string(f));
    std::vector<long long> deg(nv, 0);
    for (std::size_t f = 0; f < nf; ++f)
        for (int v : x.facets()[f]) {
            inst.up[v].push_back(static_cast<int>(nv + f));
            inst.down[nv + f].push_back(v);
            deg[v]++;
        }
    for (std::size_t v = 0; v < nv; ++v) inst.seed[v] = {0, deg[v]};
    for (std::size_t f = 0; f < nf; ++f)
        inst.seed[nv + f] = {1, static_cast<long long>(x.facets()[f].size())};
    return inst;
}

}  // namespace detail

inline IsoResult poset_isomorphic(const GradedFacePoset& a, const GradedFacePoset& b) {
    if (a.f_vector() != b.f_vector()) {
        IsoResult res;
        res.refuter = {"f-vector", detail::join_ints(a.f_vector()), detail::join_ints(b.f_vector())};
        return res;
    }
    if (a.cover_pairs().size() != b.cover_pairs().size()) {
        IsoResult res;
        res.refuter = {"cover count", std::to_string(a.cover_pairs().size()),
                       std::to_string(b.cover_pairs().size())};
        return res;
    }
    auto ia = detail::poset_instance(a);
    auto ib = detail::poset_instance(b);
    return detail::IsoEngine(ia, ib).run();
}

// Vertex bijection carrying facets onto facets; the witness maps vertex
// tokens only.
inline IsoResult complex_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.f_vector() != b.f_vector()) {
        IsoResult res;
        res.refuter = {"f-vector", detail::join_ints(a.f_vector()), detail::join_ints(b.f_vector())};
        return res;
    }
    auto ia = detail::complex_instance(a);
    auto ib = detail::complex_instance(b);
    auto res = detail::IsoEngine(ia, ib).run();
    if (res.isomorphic()) {
        // drop the synthetic facet nodes from the witness
        std::map<std::string, std::string> w;
        for (const auto& v : a.vertices()) w.emplace(v, res.witness.at(v));
        res.witness = std::move(w);
    }
    return res;
}

// Bigraphs compare as abstract two-level posets; the recorded low ranks do
// not participate.
inline IsoResult bigraph_isomorphic(const IncidenceBigraph& a, const IncidenceBigraph& b) {
    auto to_poset = [](const IncidenceBigraph& g) {
        std::vector<PosetElement> elems;
        for (const auto& id : g.low()) elems.push_back({id, 0});
        for (const auto& id : g.high()) elems.push_back({id, 1});
        return GradedFacePoset(std::move(elems), g.pairs_by_id());
    };
    return poset_isomorphic(to_poset(a), to_poset(b));
}

// Checks a claimed vertex bijection between two complexes: total, injective,
// and carrying the facet family exactly onto the target's.
inline bool verify_complex_witness(const SimplicialComplex& a, const SimplicialComplex& b,
                                   const std::map<std::string, std::string>& w) {
    if (w.size() != a.vertices().size() || a.vertices().size() != b.vertices().size()) return false;
    std::set<std::string> image;
    for (const auto& v : a.vertices()) {
        auto it = w.find(v);
        if (it == w.end() || !b.has_vertex(it->second)) return false;
        if (!image.insert(it->second).second) return false;
    }
    std::set<std::vector<int>> bfacets(b.facets().begin(), b.facets().end());
    if (a.facet_count() != b.facet_count()) return false;
    for (const auto& f : a.facets()) {
        std::vector<int> im;
        for (int v : f) im.push_back(b.vertex_index(w.at(a.vertex(v))));
        std::sort(im.begin(), im.end());
        if (!bfacets.count(im)) return false;
    }
    return true;
}

// Same, for graded posets: rank-preserving bijection carrying covers onto
// covers exactly.
inline bool verify_poset_witness(const GradedFacePoset& a, const GradedFacePoset& b,
                                 const std::map<std::string, std::string>& w) {
    if (w.size() != a.size() || a.size() != b.size()) return false;
    std::set<std::string> image;
    for (const auto& e : a.elements()) {
        auto it = w.find(e.id);
        if (it == w.end()) return false;
        int j = b.index_of(it->second);
        if (j < 0 || b.element(j).rank != e.rank) return false;
        if (!image.insert(it->second).second) return false;
    }
    if (a.cover_pairs().size() != b.cover_pairs().size()) return false;
    std::set<std::pair<int, int>> bcov(b.cover_pairs().begin(), b.cover_pairs().end());
    for (auto [x, y] : a.cover_pairs()) {
        int bx = b.index_of(w.at(a.element(x).id));
        int by = b.index_of(w.at(a.element(y).id));
        if (!bcov.count({bx, by})) return false;
    }
    return true;
}

}  // namespace skelrec
