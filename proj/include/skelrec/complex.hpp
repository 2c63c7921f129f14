#pragma once

// Simplicial complexes given by maximal faces, plus the structural predicates
// used throughout: pseudomanifold / normality / orientability checks, links,
// stellar subdivision, and the face poset.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"
#include "poset.hpp"

namespace skelrec {

class SimplicialComplex {
public:
    SimplicialComplex() : cache_(std::make_shared<FaceCache>()) {}

    // Vertices are inferred from the facets.  Repeated and non-maximal input
    // sets are dropped, so the stored facets are exactly the maximal faces.
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets) {
        SimplicialComplex x;
        std::set<std::string> vs;
        for (const auto& f : facets) {
            if (f.empty()) throw std::invalid_argument("complex: empty facet");
            vs.insert(f.begin(), f.end());
        }
        x.verts_.assign(vs.begin(), vs.end());
        std::set<std::vector<int>> fsets;
        for (const auto& f : facets) {
            std::set<int> s;
            for (const auto& v : f) s.insert(x.vertex_index(v));
            fsets.emplace(s.begin(), s.end());
        }
        std::vector<Bitset> bits;
        for (const auto& f : fsets) {
            Bitset b(x.verts_.size());
            for (int v : f) b.set(v);
            bits.push_back(std::move(b));
        }
        std::vector<std::vector<int>> keep;
        std::vector<Bitset> keep_bits;
        std::size_t i = 0;
        for (const auto& f : fsets) {
            bool maximal = true;
            std::size_t j = 0;
            for (const auto& g : fsets) {
                if (i != j && f != g && bits[i].is_subset_of(bits[j])) {
                    maximal = false;
                    break;
                }
                ++j;
            }
            if (maximal) {
                keep.push_back(f);
                keep_bits.push_back(bits[i]);
            }
            ++i;
        }
        x.facets_ = std::move(keep);
        x.facet_bits_ = std::move(keep_bits);
        return x;
    }

    const std::vector<std::string>& vertices() const { return verts_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    const std::vector<Bitset>& facet_bits() const { return facet_bits_; }
    std::size_t facet_count() const { return facets_.size(); }

    const std::string& vertex(int i) const { return verts_.at(i); }
    int vertex_index(const std::string& v) const {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        if (it == verts_.end() || *it != v)
            throw std::invalid_argument("complex: unknown vertex '" + v + "'");
        return static_cast<int>(it - verts_.begin());
    }
    bool has_vertex(const std::string& v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }

    std::vector<std::string> tokens(const std::vector<int>& face) const {
        std::vector<std::string> out;
        out.reserve(face.size());
        for (int v : face) out.push_back(verts_.at(v));
        return out;
    }

    int dim() const {
        int d = -1;
        for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }
    bool is_pure() const {
        int d = dim();
        for (const auto& f : facets_)
            if (static_cast<int>(f.size()) != d + 1) return false;
        return true;
    }

    bool is_face(const std::vector<int>& sorted_vs) const {
        if (sorted_vs.empty()) return true;
        Bitset b(verts_.size());
        for (int v : sorted_vs) b.set(v);
        for (const auto& fb : facet_bits_)
            if (b.is_subset_of(fb)) return true;
        return false;
    }

    // All k-dimensional faces, each a sorted vertex-index tuple; the list is
    // lexicographically sorted.  Memoized.
    const std::vector<std::vector<int>>& faces_of_dim(int k) const {
        if (k < 0 || k > dim()) {
            static const std::vector<std::vector<int>> empty;
            return empty;
        }
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->faces.find(k);
        if (it != cache_->faces.end()) return it->second;
        std::set<std::vector<int>> acc;
        std::vector<int> pick;
        for (const auto& f : facets_) {
            if (static_cast<int>(f.size()) < k + 1) continue;
            pick.clear();
            subsets(f, k + 1, 0, pick, acc);
        }
        return cache_->faces.emplace(k, std::vector<std::vector<int>>(acc.begin(), acc.end()))
            .first->second;
    }

    // Face counts by dimension, index 0 .. dim().
    std::vector<int> f_vector() const {
        std::vector<int> f;
        for (int k = 0; k <= dim(); ++k) f.push_back(static_cast<int>(faces_of_dim(k).size()));
        return f;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.verts_ == b.verts_ && a.facets_ == b.facets_;
    }

private:
    struct FaceCache {
        std::mutex mu;
        std::map<int, std::vector<std::vector<int>>> faces;
    };

    static void subsets(const std::vector<int>& f, int need, std::size_t from,
                        std::vector<int>& pick, std::set<std::vector<int>>& out) {
        if (need == 0) {
            out.insert(pick);
            return;
        }
        for (std::size_t i = from; i + need <= f.size(); ++i) {
            pick.push_back(f[i]);
            subsets(f, need - 1, i + 1, pick, out);
            pick.pop_back();
        }
    }

    std::vector<std::string> verts_;
    std::vector<std::vector<int>> facets_;
    std::vector<Bitset> facet_bits_;
    std::shared_ptr<FaceCache> cache_ = std::make_shared<FaceCache>();
};

// lk(G, X): maximal faces are A \ G for facets A containing G.  G must be a
// face of X; the empty face gives back X itself.
inline SimplicialComplex link(const SimplicialComplex& x, const std::vector<std::string>& g) {
    std::vector<int> gs;
    gs.reserve(g.size());
    for (const auto& v : g) gs.push_back(x.vertex_index(v));
    std::sort(gs.begin(), gs.end());
    if (!x.is_face(gs)) throw std::invalid_argument("link: not a face of the complex");
    Bitset gb(x.vertices().size());
    for (int v : gs) gb.set(v);
    std::vector<std::vector<std::string>> lf;
    for (std::size_t i = 0; i < x.facets().size(); ++i) {
        if (!gb.is_subset_of(x.facet_bits()[i])) continue;
        std::vector<std::string> rest;
        for (int v : x.facets()[i])
            if (!gb.test(v)) rest.push_back(x.vertex(v));
        if (!rest.empty()) lf.push_back(std::move(rest));
    }
    if (lf.empty()) return SimplicialComplex();
    return SimplicialComplex::from_facets(lf);
}

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int a) {
        while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace detail

// Connectivity of the vertex/edge graph.  Complexes with at most one vertex
// count as connected.
inline bool is_connected(const SimplicialComplex& x) {
    std::size_t n = x.vertices().size();
    if (n <= 1) return true;
    detail::UnionFind uf(n);
    std::size_t merges = 0;
    for (const auto& e : x.faces_of_dim(1)) merges += uf.unite(e[0], e[1]) ? 1 : 0;
    return merges == n - 1;
}

struct PseudomanifoldCheck {
    bool pure = false;
    bool pseudomanifold = false;
    // Facets below the top dimension (purity violations).
    std::vector<std::vector<std::string>> impure_facets;
    struct RidgeViolation {
        std::vector<std::string> ridge;
        int facet_count = 0;
    };
    std::vector<RidgeViolation> violations;
};

// Pure + every ridge in exactly two facets.  For a 0-dimensional complex the
// only ridge is the empty face, so the condition says "exactly two points".
inline PseudomanifoldCheck is_pseudomanifold(const SimplicialComplex& x) {
    PseudomanifoldCheck c;
    if (x.facet_count() == 0) return c;
    int d = x.dim();
    for (std::size_t i = 0; i < x.facets().size(); ++i)
        if (static_cast<int>(x.facets()[i].size()) != d + 1)
            c.impure_facets.push_back(x.tokens(x.facets()[i]));
    c.pure = c.impure_facets.empty();
    if (!c.pure) return c;
    if (d == 0) {
        c.pseudomanifold = x.facet_count() == 2;
        if (!c.pseudomanifold)
            c.violations.push_back({{}, static_cast<int>(x.facet_count())});
        return c;
    }
    for (const auto& r : x.faces_of_dim(d - 1)) {
        Bitset rb(x.vertices().size());
        for (int v : r) rb.set(v);
        int cnt = 0;
        for (const auto& fb : x.facet_bits())
            if (rb.is_subset_of(fb)) ++cnt;
        if (cnt != 2) c.violations.push_back({x.tokens(r), cnt});
    }
    c.pseudomanifold = c.violations.empty();
    return c;
}

struct NormalityCheck {
    bool normal = false;
    bool connected = false;
    PseudomanifoldCheck pm;
    // Faces of dimension <= dim-2 whose link is disconnected.
    std::vector<std::vector<std::string>> disconnected_link_faces;
};

inline NormalityCheck is_normal(const SimplicialComplex& x) {
    NormalityCheck c;
    c.pm = is_pseudomanifold(x);
    c.connected = is_connected(x);
    if (!c.pm.pseudomanifold || !c.connected) return c;
    for (int k = 0; k <= x.dim() - 2; ++k)
        for (const auto& g : x.faces_of_dim(k))
            if (!is_connected(link(x, x.tokens(g)))) c.disconnected_link_faces.push_back(x.tokens(g));
    c.normal = c.disconnected_link_faces.empty();
    return c;
}

struct OrientationAssignment {
    // signs[i] is the orientation sign of facets()[i] taken with its sorted
    // vertex order; valid only when the complex is orientable.
    std::vector<int> signs;
};

struct OrientabilityResult {
    bool orientable = false;
    OrientationAssignment assignment;
    int components = 0;
    // When not orientable: a facet cycle whose sign constraints are
    // inconsistent (closed walk in the dual graph with odd flip parity).
    std::vector<std::vector<std::string>> odd_cycle;
};

// Propagates facet signs across ridges.  Two facets F, F' sharing ridge R are
// coherently oriented when s_F * (-1)^i = -s_F' * (-1)^i', where i is the
// position of the vertex F \ R inside the sorted tuple F.  Seeds each dual
// component at its smallest facet with sign +1.
inline OrientabilityResult orientability(const SimplicialComplex& x) {
    auto pm = is_pseudomanifold(x);
    if (!pm.pseudomanifold)
        throw std::invalid_argument("orientability: complex is not a pseudomanifold");
    OrientabilityResult res;
    std::size_t m = x.facet_count();
    res.assignment.signs.assign(m, 0);
    int d = x.dim();
    if (d == 0) {
        res.orientable = true;
        res.assignment.signs = {1, 1};
        res.components = 1;
        return res;
    }
    // adjacency: ridge -> its two facets, with flip parity from vertex positions
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> by_ridge;  // ridge -> (facet, pos)
    for (std::size_t i = 0; i < m; ++i) {
        const auto& f = x.facets()[i];
        for (std::size_t p = 0; p < f.size(); ++p) {
            std::vector<int> r;
            r.reserve(f.size() - 1);
            for (std::size_t q = 0; q < f.size(); ++q)
                if (q != p) r.push_back(f[q]);
            by_ridge[r].emplace_back(static_cast<int>(i), static_cast<int>(p));
        }
    }
    struct Edge {
        int to;
        int parity;  // 1 when the two signs must differ... see below
    };
    std::vector<std::vector<Edge>> adj(m);
    for (const auto& [r, fs] : by_ridge) {
        // pm check guarantees exactly two entries
        auto [f1, p1] = fs[0];
        auto [f2, p2] = fs[1];
        // s1*(-1)^p1 = -s2*(-1)^p2  =>  s1 = s2 iff p1+p2 is odd
        int need_equal = (p1 + p2) % 2;
        adj[f1].push_back({f2, need_equal});
        adj[f2].push_back({f1, need_equal});
    }
    std::vector<int> parent(m, -1);
    auto& sign = res.assignment.signs;
    for (std::size_t seed = 0; seed < m; ++seed) {
        if (sign[seed] != 0) continue;
        res.components++;
        sign[seed] = 1;
        std::vector<int> queue{static_cast<int>(seed)};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int f = queue[qi];
            for (const auto& e : adj[f]) {
                int want = e.parity ? sign[f] : -sign[f];
                if (sign[e.to] == 0) {
                    sign[e.to] = want;
                    parent[e.to] = f;
                    queue.push_back(e.to);
                } else if (sign[e.to] != want) {
                    // walk both facets up to the root; the closed walk formed by
                    // the two tree paths plus this edge has odd flip parity
                    std::vector<int> pa, pb;
                    for (int v = f; v != -1; v = parent[v]) pa.push_back(v);
                    for (int v = e.to; v != -1; v = parent[v]) pb.push_back(v);
                    std::reverse(pa.begin(), pa.end());
                    for (int v : pa) res.odd_cycle.push_back(x.tokens(x.facets()[v]));
                    for (int v : pb) res.odd_cycle.push_back(x.tokens(x.facets()[v]));
                    res.orientable = false;
                    return res;
                }
            }
        }
    }
    res.orientable = true;
    return res;
}

// Replace facet F by the cone from a fresh vertex over its boundary.
inline SimplicialComplex stellar_subdivide(const SimplicialComplex& x,
                                           const std::vector<std::string>& facet,
                                           const std::string& new_vertex) {
    if (x.has_vertex(new_vertex))
        throw std::invalid_argument("stellar_subdivide: vertex '" + new_vertex + "' already present");
    std::vector<int> fs;
    fs.reserve(facet.size());
    for (const auto& v : facet) fs.push_back(x.vertex_index(v));
    std::sort(fs.begin(), fs.end());
    auto it = std::find(x.facets().begin(), x.facets().end(), fs);
    if (it == x.facets().end())
        throw std::invalid_argument("stellar_subdivide: given face is not a facet");
    std::vector<std::vector<std::string>> out;
    for (const auto& f : x.facets())
        if (f != fs) out.push_back(x.tokens(f));
    for (std::size_t p = 0; p < fs.size(); ++p) {
        std::vector<std::string> cone{new_vertex};
        for (std::size_t q = 0; q < fs.size(); ++q)
            if (q != p) cone.push_back(x.vertex(fs[q]));
        out.push_back(std::move(cone));
    }
    return SimplicialComplex::from_facets(out);
}

inline long long euler_characteristic(const SimplicialComplex& x) {
    long long chi = 0;
    auto f = x.f_vector();
    for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 ? -f[k] : f[k]);
    return chi;
}

// The proper-face poset: one element per nonempty face, id = comma-joined
// sorted vertex tokens, rank = dimension.
inline GradedFacePoset face_poset(const SimplicialComplex& x) {
    auto face_id = [&](const std::vector<int>& f) {
        std::string id;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) id += ',';
            id += x.vertex(f[i]);
        }
        return id;
    };
    std::vector<PosetElement> elems;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int k = 0; k <= x.dim(); ++k) {
        for (const auto& f : x.faces_of_dim(k)) {
            elems.push_back({face_id(f), k});
            if (k == 0) continue;
            for (std::size_t p = 0; p < f.size(); ++p) {
                std::vector<int> sub;
                for (std::size_t q = 0; q < f.size(); ++q)
                    if (q != p) sub.push_back(f[q]);
                covers.emplace_back(face_id(sub), face_id(f));
            }
        }
    }
    return GradedFacePoset(std::move(elems), covers);
}

// Vertex sets of the rank-k faces of a lattice, packaged as a complex.  For
// lattices built by face_poset this recovers the k-skeleton; for polytope
// lattices the "facets" are the k-faces' vertex sets.
inline SimplicialComplex skeleton_complex(const GradedFacePoset& p, int k) {
    if (k < 0 || k > p.max_rank()) throw std::out_of_range("skeleton_complex: rank out of range");
    auto below = p.down_closures();
    std::vector<std::vector<std::string>> facets;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.element(static_cast<int>(i)).rank != k) continue;
        std::vector<std::string> f;
        if (k == 0)
            f.push_back(p.element(static_cast<int>(i)).id);
        else
            below[i].for_each_set([&](std::size_t j) {
                if (p.element(static_cast<int>(j)).rank == 0)
                    f.push_back(p.element(static_cast<int>(j)).id);
            });
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

}  // namespace skelrec
