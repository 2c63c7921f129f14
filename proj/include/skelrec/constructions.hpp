#pragma once

// Generators for the worked families: face lattices from vertex-facet data,
// the wedge triple (W, P, Q) over a cross-polytope base, the mod-3
// pseudomanifold M^{d-1} with its two stellar subdivisions, and a registry of
// named fixtures used by the command-line tool and the test suites.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex.hpp"
#include "poset.hpp"

namespace skelrec {

struct FacetList {
    std::vector<std::string> vertices;  // optional; the union of facets is always included
    std::vector<std::vector<std::string>> facets;
};

// Builds the face lattice (proper nonempty faces) generated by closing the
// facet family under pairwise intersection.  Rank is longest-chain height.
// Inputs whose cover graph fails to realize the full containment order are
// rejected; polytopal vertex-facet incidences always pass.
inline GradedFacePoset face_lattice_from_facets(const FacetList& fl) {
    std::set<std::string> vs(fl.vertices.begin(), fl.vertices.end());
    for (const auto& f : fl.facets) {
        if (f.empty()) throw std::invalid_argument("face_lattice_from_facets: empty facet");
        vs.insert(f.begin(), f.end());
    }
    std::vector<std::string> verts(vs.begin(), vs.end());
    auto vindex = [&](const std::string& v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::set<Bitset> seen;
    std::vector<Bitset> faces;
    for (const auto& f : fl.facets) {
        Bitset b(verts.size());
        for (const auto& v : f) b.set(vindex(v));
        if (seen.insert(b).second) faces.push_back(b);
    }
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (faces[i].is_subset_of(faces[j]) || faces[j].is_subset_of(faces[i]))
                throw std::invalid_argument("face_lattice_from_facets: facet contained in another");
    // close under pairwise intersection until no new face appears
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Bitset m = faces[i] & faces[j];
            if (m.any() && seen.insert(m).second) faces.push_back(m);
        }
    std::sort(faces.begin(), faces.end(), [](const Bitset& a, const Bitset& b) {
        auto ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });
    std::size_t n = faces.size();
    std::vector<int> rank(n, 0);
    std::vector<std::vector<int>> strictly_below(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (faces[j].count() < faces[i].count() && faces[j].is_subset_of(faces[i])) {
                strictly_below[i].push_back(static_cast<int>(j));
                rank[i] = std::max(rank[i], rank[j] + 1);
            }
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < n; ++i)
        for (int j : strictly_below[i])
            if (rank[j] + 1 == rank[i]) covers.emplace_back(j, static_cast<int>(i));
    // gradedness check: covers must close back to the containment order
    {
        std::vector<Bitset> below(n, Bitset(n));
        for (std::size_t i = 0; i < n; ++i)
            for (int j : strictly_below[i])
                if (rank[j] + 1 == rank[i]) {
                    below[i] |= below[j];
                    below[i].set(j);
                }
        for (std::size_t i = 0; i < n; ++i)
            for (int j : strictly_below[i])
                if (!below[i].test(j))
                    throw std::invalid_argument(
                        "face_lattice_from_facets: containment order is not graded");
    }
    auto face_id = [&](const Bitset& b) {
        std::string id;
        b.for_each_set([&](std::size_t v) {
            if (!id.empty()) id += ',';
            id += verts[v];
        });
        return id;
    };
    std::vector<PosetElement> elems;
    for (std::size_t i = 0; i < n; ++i) elems.push_back({face_id(faces[i]), rank[i]});
    std::vector<std::pair<std::string, std::string>> cov_ids;
    for (auto [a, b] : covers) cov_ids.emplace_back(elems[a].id, elems[b].id);
    return GradedFacePoset(std::move(elems), cov_ids);
}

// ---------------------------------------------------------------------------
// Wedge family.  The base facet F is a (d-1)-cross-polytope with vertex pairs
// +-e1 .. +-e{d-1}; W is the wedge over the vertex +e1, whose top copy keeps
// +e1 fixed and primes everything else ("top..." tokens).  P perturbs A/A'
// around the apex edge; Q instead pulls top+e2 down, giving B/B'.  P and Q
// share every proper face of W except the two facets replaced, which is what
// makes their low skeleta coincide while the full lattices differ.

struct WedgeFacetLists {
    FacetList w, p, q;
};

namespace detail {

inline std::string wedge_prime(const std::string& t) {
    if (t == "+e1") return t;
    return "top" + t;
}

}  // namespace detail

inline WedgeFacetLists wedge_facet_lists(int d) {
    if (d < 3) throw std::invalid_argument("wedge_facet_lists: need d >= 3");
    std::vector<std::string> base;
    for (int i = 1; i < d; ++i) {
        base.push_back("+e" + std::to_string(i));
        base.push_back("-e" + std::to_string(i));
    }
    std::vector<std::string> F = base;
    std::vector<std::string> Fp;
    for (const auto& t : F) Fp.push_back(detail::wedge_prime(t));
    // lateral facets: one transversal T of the +-pairs, glued to its primed copy
    std::vector<std::vector<std::string>> laterals;
    for (int mask = 0; mask < (1 << (d - 1)); ++mask) {
        std::vector<std::string> t;
        for (int i = 1; i < d; ++i)
            t.push_back((mask >> (i - 1) & 1 ? "-e" : "+e") + std::to_string(i));
        std::set<std::string> lat(t.begin(), t.end());
        for (const auto& v : t) lat.insert(detail::wedge_prime(v));
        laterals.emplace_back(lat.begin(), lat.end());
    }
    WedgeFacetLists out;
    out.w.facets.push_back(F);
    out.w.facets.push_back(Fp);
    for (const auto& l : laterals) out.w.facets.push_back(l);

    std::vector<std::string> cprime;  // top copies of +-e2 .. +-e{d-1}
    for (int j = 2; j < d; ++j) {
        cprime.push_back("top+e" + std::to_string(j));
        cprime.push_back("top-e" + std::to_string(j));
    }
    out.p.facets.push_back(F);
    for (const auto& l : laterals) out.p.facets.push_back(l);
    std::vector<std::string> A = cprime, Ap = cprime;
    A.push_back("+e1");
    Ap.push_back("top-e1");
    out.p.facets.push_back(A);
    out.p.facets.push_back(Ap);

    std::vector<std::string> dset{"+e1", "top-e1"};  // shared wall of B and B'
    for (int j = 3; j < d; ++j) {
        dset.push_back("top+e" + std::to_string(j));
        dset.push_back("top-e" + std::to_string(j));
    }
    out.q.facets.push_back(F);
    for (const auto& l : laterals) out.q.facets.push_back(l);
    std::vector<std::string> B = dset, Bp = dset;
    B.push_back("top+e2");
    Bp.push_back("top-e2");
    out.q.facets.push_back(B);
    out.q.facets.push_back(Bp);
    return out;
}

struct WedgeFamily {
    GradedFacePoset w, p, q;
};

inline WedgeFamily wedge_family(int d) {
    auto fl = wedge_facet_lists(d);
    return WedgeFamily{face_lattice_from_facets(fl.w), face_lattice_from_facets(fl.p),
                       face_lattice_from_facets(fl.q)};
}

// ---------------------------------------------------------------------------
// Mod-3 pseudomanifold M^{d-1}: vertex set {1..d} x {0,1,2} with tokens
// "i:a"; facets are transversals (a_1..a_d) whose coordinate sum is nonzero
// mod 3.  2 * 3^{d-1} facets.

inline std::string mod3_vertex(int i, int a) {
    return std::to_string(i) + ":" + std::to_string(a);
}

inline SimplicialComplex mod3_pseudomanifold(int d) {
    if (d < 1) throw std::invalid_argument("mod3_pseudomanifold: need d >= 1");
    std::vector<std::vector<std::string>> facets;
    std::vector<int> a(d, 0);
    while (true) {
        int sum = 0;
        for (int v : a) sum += v;
        if (sum % 3 != 0) {
            std::vector<std::string> f;
            for (int i = 0; i < d; ++i) f.push_back(mod3_vertex(i + 1, a[i]));
            facets.push_back(std::move(f));
        }
        int i = d - 1;
        while (i >= 0 && a[i] == 2) a[i--] = 0;
        if (i < 0) break;
        a[i]++;
    }
    return SimplicialComplex::from_facets(facets);
}

// The two stellar subdivisions of M^{d-1} that share a (d-2)-skeleton but
// have non-isomorphic face posets.  Both split the facet (1,1),(2,0),..,(d,0)
// first; X then splits (1,0),(2,1),(3,0),..,(d,0) while Y splits
// (1,0),(2,2),(3,0),..,(d,0).
struct SubdividedPair {
    SimplicialComplex x, y;
    // the fresh cone vertices, in subdivision order
    std::string x1 = "v1", x2 = "v2", y1 = "w1", y2 = "w2";
};

inline SubdividedPair subdivided_pair(int d) {
    if (d < 3) throw std::invalid_argument("subdivided_pair: need d >= 3");
    auto m = mod3_pseudomanifold(d);
    auto shared_facet = [&](int a1) {
        std::vector<std::string> f{mod3_vertex(1, a1)};
        for (int i = 2; i <= d; ++i) f.push_back(mod3_vertex(i, 0));
        return f;
    };
    std::vector<std::string> s1 = shared_facet(1);
    std::vector<std::string> s2x{mod3_vertex(1, 0), mod3_vertex(2, 1)};
    std::vector<std::string> s2y{mod3_vertex(1, 0), mod3_vertex(2, 2)};
    for (int i = 3; i <= d; ++i) {
        s2x.push_back(mod3_vertex(i, 0));
        s2y.push_back(mod3_vertex(i, 0));
    }
    SubdividedPair out;
    out.x = stellar_subdivide(stellar_subdivide(m, s1, out.x1), s2x, out.x2);
    out.y = stellar_subdivide(stellar_subdivide(m, s1, out.y1), s2y, out.y2);
    return out;
}

// ---------------------------------------------------------------------------
// Classical sphere fixtures.

inline SimplicialComplex simplex_boundary(int d) {
    if (d < 1) throw std::invalid_argument("simplex_boundary: need d >= 1");
    std::vector<std::string> vs;
    for (int i = 1; i <= d + 1; ++i) vs.push_back(std::to_string(i));
    std::vector<std::vector<std::string>> facets;
    for (int skip = 0; skip <= d; ++skip) {
        std::vector<std::string> f;
        for (int i = 0; i <= d; ++i)
            if (i != skip) f.push_back(vs[i]);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

inline SimplicialComplex cross_polytope_boundary(int d) {
    if (d < 1) throw std::invalid_argument("cross_polytope_boundary: need d >= 1");
    std::vector<std::vector<std::string>> facets;
    for (int mask = 0; mask < (1 << d); ++mask) {
        std::vector<std::string> f;
        for (int i = 1; i <= d; ++i)
            f.push_back((mask >> (i - 1) & 1 ? "-e" : "+e") + std::to_string(i));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

// d-cube face lattice; vertices are coordinate bitstrings, facets fix one
// coordinate.
inline GradedFacePoset cube_lattice(int d) {
    if (d < 1 || d > 10) throw std::invalid_argument("cube_lattice: need 1 <= d <= 10");
    std::vector<std::string> verts;
    for (int mask = 0; mask < (1 << d); ++mask) {
        std::string v(d, '0');
        for (int i = 0; i < d; ++i)
            if (mask >> i & 1) v[i] = '1';
        verts.push_back(std::move(v));
    }
    FacetList fl;
    for (int i = 0; i < d; ++i)
        for (char b : {'0', '1'}) {
            std::vector<std::string> f;
            for (const auto& v : verts)
                if (v[i] == b) f.push_back(v);
            fl.facets.push_back(std::move(f));
        }
    return face_lattice_from_facets(fl);
}

// Cyclic polytope boundary C(d, n) via the evenness criterion: a d-subset S
// of the n moment-curve points is a facet iff every pair outside S has an
// even count of S strictly between them.
inline SimplicialComplex cyclic_polytope_boundary(int d, int n) {
    if (d < 2 || n < d + 1) throw std::invalid_argument("cyclic_polytope_boundary: need n > d >= 2");
    std::vector<std::vector<std::string>> facets;
    std::vector<int> pick;
    auto is_facet = [&](const std::vector<int>& s) {
        std::vector<bool> in(n + 1, false);
        for (int v : s) in[v] = true;
        for (int i = 1; i <= n; ++i) {
            if (in[i]) continue;
            for (int j = i + 1; j <= n; ++j) {
                if (in[j]) continue;
                int cnt = 0;
                for (int v : s)
                    if (v > i && v < j) ++cnt;
                if (cnt % 2) return false;
            }
        }
        return true;
    };
    std::vector<int> s;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(s.size()) == d) {
            if (is_facet(s)) {
                std::vector<std::string> f;
                for (int v : s) f.push_back("t" + std::to_string(v));
                facets.push_back(std::move(f));
            }
            return;
        }
        for (int v = from; v <= n; ++v) {
            s.push_back(v);
            self(self, v + 1);
            s.pop_back();
        }
    };
    rec(rec, 1);
    return SimplicialComplex::from_facets(facets);
}

// Stacked 2-sphere on 6 vertices: same f-vector (6, 12, 8) as the
// octahedron, different face poset (it has degree-3 vertices).
inline SimplicialComplex stacked_sphere_6() {
    return SimplicialComplex::from_facets({{"1", "2", "3"},
                                           {"1", "2", "4"},
                                           {"1", "3", "4"},
                                           {"2", "3", "5"},
                                           {"2", "4", "5"},
                                           {"3", "4", "6"},
                                           {"3", "5", "6"},
                                           {"4", "5", "6"}});
}

// Minimal 6-vertex real projective plane; every edge lies in two triangles
// but it is not orientable.
inline SimplicialComplex projective_plane_6() {
    return SimplicialComplex::from_facets({{"1", "2", "3"},
                                           {"1", "3", "4"},
                                           {"1", "4", "5"},
                                           {"1", "5", "6"},
                                           {"1", "2", "6"},
                                           {"2", "3", "5"},
                                           {"3", "4", "6"},
                                           {"2", "4", "5"},
                                           {"3", "5", "6"},
                                           {"2", "4", "6"}});
}

// Two tetrahedron boundaries sharing a single vertex: a pseudomanifold whose
// glue-vertex link is disconnected, the stock normality counterexample.
inline SimplicialComplex pinched_spheres() {
    std::vector<std::vector<std::string>> facets;
    std::vector<std::string> a{"p", "a1", "a2", "a3"}, b{"p", "b1", "b2", "b3"};
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<std::string> fa, fb;
        for (int i = 0; i < 4; ++i)
            if (i != skip) {
                fa.push_back(a[i]);
                fb.push_back(b[i]);
            }
        facets.push_back(fa);
        facets.push_back(fb);
    }
    return SimplicialComplex::from_facets(facets);
}

// ---------------------------------------------------------------------------
// Named fixture registry.  Names are colon-separated: "simplex:4",
// "crosspoly:4", "cube:4", "cyclic:6:9", "mod3:4", "x:4", "y:4", "wedgeW:4",
// "wedgeP:4", "wedgeQ:4", "stacked:6", "rp2:6", "pinched".  Exactly one of
// `complex` / `lattice` is set per fixture.

struct Fixture {
    std::string name;
    std::optional<SimplicialComplex> complex;
    std::optional<GradedFacePoset> lattice;
};

inline std::vector<std::string> standard_fixture_names() {
    std::vector<std::string> names;
    for (int d = 3; d <= 6; ++d) names.push_back("simplex:" + std::to_string(d));
    for (int d = 3; d <= 5; ++d) names.push_back("crosspoly:" + std::to_string(d));
    for (int d = 3; d <= 4; ++d) names.push_back("cube:" + std::to_string(d));
    names.push_back("cyclic:6:8");
    names.push_back("cyclic:6:9");
    for (int d = 2; d <= 5; ++d) names.push_back("mod3:" + std::to_string(d));
    for (int d = 3; d <= 5; ++d) {
        names.push_back("x:" + std::to_string(d));
        names.push_back("y:" + std::to_string(d));
    }
    for (int d = 3; d <= 6; ++d)
        for (const char* w : {"wedgeW", "wedgeP", "wedgeQ"})
            names.push_back(std::string(w) + ":" + std::to_string(d));
    names.push_back("stacked:6");
    names.push_back("rp2:6");
    names.push_back("pinched");
    return names;
}

inline Fixture standard_fixture(const std::string& name) {
    auto parts = [&] {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : name) {
            if (ch == ':') {
                out.push_back(cur);
                cur.clear();
            } else
                cur += ch;
        }
        out.push_back(cur);
        return out;
    }();
    auto arg = [&](std::size_t i, int lo, int hi) {
        if (parts.size() <= i) throw std::invalid_argument("fixture '" + name + "': missing parameter");
        int v = 0;
        try {
            v = std::stoi(parts[i]);
        } catch (const std::exception&) {
            throw std::invalid_argument("fixture '" + name + "': non-numeric parameter");
        }
        if (v < lo || v > hi)
            throw std::invalid_argument("fixture '" + name + "': parameter out of range [" +
                                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return v;
    };
    Fixture fx;
    fx.name = name;
    const std::string& kind = parts[0];
    if (kind == "simplex")
        fx.complex = simplex_boundary(arg(1, 1, 9));
    else if (kind == "crosspoly")
        fx.complex = cross_polytope_boundary(arg(1, 1, 7));
    else if (kind == "cube")
        fx.lattice = cube_lattice(arg(1, 1, 5));
    else if (kind == "cyclic")
        fx.complex = cyclic_polytope_boundary(arg(1, 2, 8), arg(2, 3, 12));
    else if (kind == "mod3")
        fx.complex = mod3_pseudomanifold(arg(1, 1, 6));
    else if (kind == "x")
        fx.complex = subdivided_pair(arg(1, 3, 6)).x;
    else if (kind == "y")
        fx.complex = subdivided_pair(arg(1, 3, 6)).y;
    else if (kind == "wedgeW")
        fx.lattice = wedge_family(arg(1, 3, 7)).w;
    else if (kind == "wedgeP")
        fx.lattice = wedge_family(arg(1, 3, 7)).p;
    else if (kind == "wedgeQ")
        fx.lattice = wedge_family(arg(1, 3, 7)).q;
    else if (name == "stacked:6")
        fx.complex = stacked_sphere_6();
    else if (name == "rp2:6")
        fx.complex = projective_plane_6();
    else if (name == "pinched")
        fx.complex = pinched_spheres();
    else
        throw std::invalid_argument("unknown fixture '" + name +
                                    "'; see standard_fixture_names()");
    return fx;
}

// Face lattice view of any fixture: complexes go through face_poset.
inline GradedFacePoset fixture_lattice(const std::string& name) {
    auto fx = standard_fixture(name);
    if (fx.lattice) return *fx.lattice;
    return face_poset(*fx.complex);
}

}  // namespace skelrec
