// Command-line front end: fixture generation, lattice/skeleton
// reconstruction, isomorphism queries, property checks, and scripted
// end-to-end demonstrations.
//
// Exit codes: 0 success (all claims pass), 1 failed claim or reconstruction
// diagnostic, 2 usage or input errors.

#include <chrono>
#include <cstddef>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skelrec/skelrec.hpp"

namespace {

using namespace skelrec;
using Clock = std::chrono::steady_clock;

std::string g_format = "json";

struct Claim {
    std::string name;
    bool pass = false;
    json detail;
};

struct Report {
    std::string command;
    std::map<std::string, std::string> inputs;  // label -> fnv1a digest
    std::vector<Claim> claims;
    long long wall_ms = 0;

    bool all_pass() const {
        for (const auto& c : claims)
            if (!c.pass) return false;
        return true;
    }

    json to_json() const {
        json j;
        j["command"] = command;
        j["inputs"] = json::object();
        for (const auto& [k, v] : inputs) j["inputs"][k] = v;
        j["results"] = json::array();
        for (const auto& c : claims) {
            json r{{"claim", c.name}, {"pass", c.pass}};
            if (!c.detail.is_null()) r["detail"] = c.detail;
            j["results"].push_back(std::move(r));
        }
        j["wallTimeMs"] = wall_ms;
        return j;
    }

    std::string to_text() const {
        std::string out = command + "\n";
        std::size_t n = 0;
        for (const auto& c : claims) {
            out += (c.pass ? "ok   " : "FAIL ") + c.name + "\n";
            n += c.pass;
        }
        out += "claims passed: " + std::to_string(n) + "/" + std::to_string(claims.size()) + "\n";
        return out;
    }
};

int emit(Report& rep, Clock::time_point t0) {
    rep.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    if (g_format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text();
    return rep.all_pass() ? 0 : 1;
}

std::string digest(const json& j) { return fnv1a_hex(j.dump(2)); }

json parse_file(const std::string& path, std::string* raw_out = nullptr) {
    auto raw = read_file(path);
    if (raw_out) *raw_out = raw;
    try {
        return json::parse(raw);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("'" + path + "': " + e.what());
    }
}

// ---------------------------------------------------------------------- gen

struct GenOpts {
    std::string family, member, name, out, slice;
    int d = 4;
    bool dot = false;
};

int run_gen(const GenOpts& o) {
    std::optional<GradedFacePoset> lat;
    std::optional<SimplicialComplex> cx;
    if (o.family == "wedge") {
        auto wf = wedge_family(o.d);
        if (o.member == "w")
            lat = wf.w;
        else if (o.member == "p")
            lat = wf.p;
        else if (o.member == "q")
            lat = wf.q;
        else
            throw std::invalid_argument("gen: --family wedge needs --member w|p|q");
    } else if (o.family == "mod3") {
        if (o.d < 2) throw std::invalid_argument("gen: --family mod3 needs --d >= 2");
        cx = mod3_pseudomanifold(o.d);
    } else if (o.family == "xy") {
        auto sp = subdivided_pair(o.d);
        if (o.member == "x")
            cx = sp.x;
        else if (o.member == "y")
            cx = sp.y;
        else
            throw std::invalid_argument("gen: --family xy needs --member x|y");
    } else {  // fixture
        if (o.name.empty()) throw std::invalid_argument("gen: --family fixture needs --name");
        auto fx = standard_fixture(o.name);
        if (fx.complex)
            cx = std::move(fx.complex);
        else
            lat = std::move(fx.lattice);
    }

    if (!o.slice.empty()) {
        auto pos = o.slice.find(':');
        if (pos == std::string::npos) throw std::invalid_argument("gen: --slice expects A:B");
        int a = 0, b = 0;
        try {
            a = std::stoi(o.slice.substr(0, pos));
            b = std::stoi(o.slice.substr(pos + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("gen: --slice expects numeric A:B");
        }
        GradedFacePoset p = lat ? *lat : face_poset(*cx);
        save_json(o.out, bigraph_to_json(bigraph_of(slice(p, a, b))));
        return 0;
    }
    if (o.dot) {
        std::string label = o.name.empty() ? o.family : o.name;
        write_file(o.out, lat ? skeleton_dot(*lat, label) : skeleton_dot(*cx, label));
        return 0;
    }
    save_json(o.out, lat ? lattice_to_json(*lat) : complex_to_json(*cx));
    return 0;
}

// -------------------------------------------------------------- reconstruct

int run_reconstruct4(const std::string& in, const std::string& out, std::size_t max_candidate) {
    auto t0 = Clock::now();
    Report rep;
    rep.command = "reconstruct4";
    std::string raw;
    auto b = bigraph_from_json(parse_file(in, &raw));
    rep.inputs["in"] = fnv1a_hex(raw);
    auto rec = reconstruct_4polytope(b, max_candidate ? max_candidate : SIZE_MAX);
    rep.claims.push_back({"every ridge lies in exactly two facets", true, {}});
    rep.claims.push_back({"euler relation f0 - f1 + f2 - f3 = 0", true, {}});
    rep.claims.push_back({"rank 0..3 lattice assembled", true, json{{"f", rec.lattice.f_vector()}}});
    if (!out.empty()) save_json(out, lattice_to_json(rec.lattice));
    return emit(rep, t0);
}

int run_reconstruct_skeleton(const std::string& in, const std::string& out, int k, int d) {
    auto t0 = Clock::now();
    Report rep;
    rep.command = "reconstruct-skeleton";
    std::string raw;
    auto b = bigraph_from_json(parse_file(in, &raw));
    rep.inputs["in"] = fnv1a_hex(raw);
    int claimed = d > 0 ? d : k + 2;  // weakest dimension claim admitting this k
    auto x = reconstruct_skeleton(b, k, claimed);
    rep.claims.push_back(
        {"faces down to rank 0 form a simplicial skeleton", true, json{{"f", x.f_vector()}}});
    if (!out.empty()) save_json(out, complex_to_json(x));
    return emit(rep, t0);
}

// ---------------------------------------------------------------------- iso

std::string sniff_kind(const json& j, const std::string& path) {
    if (j.contains("facets")) return "complex";
    if (j.contains("faces")) return "poset";
    if (j.contains("low")) return "bigraph";
    throw std::invalid_argument("'" + path + "': unrecognized input format");
}

int run_iso(const std::string& a_path, const std::string& b_path, std::string kind) {
    json ja = parse_file(a_path), jb = parse_file(b_path);
    if (kind.empty()) kind = sniff_kind(ja, a_path);
    if (sniff_kind(ja, a_path) != kind || sniff_kind(jb, b_path) != kind)
        throw std::invalid_argument("iso: inputs do not both match kind '" + kind + "'");
    IsoResult r;
    if (kind == "poset")
        r = poset_isomorphic(lattice_from_json(ja), lattice_from_json(jb));
    else if (kind == "complex")
        r = complex_isomorphic(complex_from_json(ja), complex_from_json(jb));
    else
        r = bigraph_isomorphic(bigraph_from_json(ja), bigraph_from_json(jb));
    json out = iso_result_to_json(r);
    out["kind"] = kind;
    if (g_format == "json")
        std::cout << out.dump(2) << "\n";
    else if (r.isomorphic())
        std::cout << "isomorphic\n";
    else
        std::cout << "not-isomorphic (invariant: " << r.refuter.invariant << ")\n";
    return 0;
}

// -------------------------------------------------------------------- check

int run_check(const std::string& in, const std::string& what, int d, int k) {
    auto x = complex_from_json(parse_file(in));
    json out;
    bool pass = true;
    if (what == "pseudomanifold") {
        auto c = is_pseudomanifold(x);
        out["pure"] = c.pure;
        out["pseudomanifold"] = c.pseudomanifold;
        out["impureFacets"] = c.impure_facets;
        out["violations"] = json::array();
        for (const auto& v : c.violations)
            out["violations"].push_back({{"ridge", v.ridge}, {"facetCount", v.facet_count}});
        pass = c.pseudomanifold;
    } else if (what == "normal") {
        auto c = is_normal(x);
        out["normal"] = c.normal;
        out["connected"] = c.connected;
        out["pseudomanifold"] = c.pm.pseudomanifold;
        out["disconnectedLinkFaces"] = c.disconnected_link_faces;
        pass = c.normal;
    } else if (what == "orientable") {
        auto c = orientability(x);
        out["orientable"] = c.orientable;
        out["components"] = c.components;
        if (!c.orientable) out["oddCycle"] = c.odd_cycle;
        pass = c.orientable;
    } else if (what == "homology") {
        out["betti"] = betti(x);
        out["euler"] = euler_characteristic(x);
        out["homologyManifold"] = is_homology_manifold(x).pass;
    } else {  // hypotheses
        if (d <= 0 || k <= 0)
            throw std::invalid_argument("check: --what hypotheses needs --d and --k");
        auto rep = check_pseudomanifold_hypotheses(x, d, k);
        out["pass"] = rep.pass;
        out["normal"] = rep.normality.normal;
        out["links"] = json::array();
        for (const auto& lc : rep.links) out["links"].push_back(link_check_to_json(lc));
        out["variantApplicable"] = rep.variant_applicable;
        out["variantPass"] = rep.variant_pass;
        out["variantLinks"] = json::array();
        for (const auto& lc : rep.variant_links)
            out["variantLinks"].push_back(link_check_to_json(lc));
        pass = rep.pass;
    }
    if (g_format == "json")
        std::cout << out.dump(2) << "\n";
    else
        std::cout << what << ": " << (pass ? "pass" : "fail") << "\n";
    return pass ? 0 : 1;
}

// -------------------------------------------------------------------- demos

int max_vertex_facet_incidence(const GradedFacePoset& p) {
    auto up = p.up_closures();
    int top = p.max_rank(), best = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.element(static_cast<int>(i)).rank != 0) continue;
        int c = 0;
        up[i].for_each_set([&](std::size_t j) {
            if (p.element(static_cast<int>(j)).rank == top) ++c;
        });
        best = std::max(best, c);
    }
    return best;
}

int run_demo_edge_ridge(const std::vector<std::string>& fixtures, bool corrupt) {
    auto t0 = Clock::now();
    Report rep;
    rep.command = "demo-edge-ridge";
    for (const auto& name : fixtures) {
        auto truth = fixture_lattice(name);
        auto b = bigraph_of(slice(truth, 1, 2));
        rep.inputs[name] = digest(bigraph_to_json(b));
        Claim c{name + ": lattice recovered from edge-ridge incidences", false, {}};
        try {
            auto rec = reconstruct_4polytope(b);
            auto res = poset_isomorphic(rec.lattice, truth);
            c.pass = res.isomorphic() && verify_poset_witness(rec.lattice, truth, res.witness);
        } catch (const ReconstructionError& e) {
            c.detail = json{{"error", e.code()}, {"message", e.what()}};
        }
        rep.claims.push_back(std::move(c));
    }
    if (corrupt) {
        auto truth = fixture_lattice("simplex:4");
        auto b = bigraph_of(slice(truth, 1, 2));
        auto pairs = b.pairs_by_id();
        pairs.pop_back();
        Claim c{"one deleted incidence raises a coverage diagnostic", false, {}};
        try {
            reconstruct_4polytope(IncidenceBigraph(1, b.low(), b.high(), pairs));
        } catch (const ReconstructionError& e) {
            c.pass = true;
            c.detail = json{{"error", e.code()}};
        }
        rep.claims.push_back(std::move(c));
    }
    return emit(rep, t0);
}

int run_demo_identical_skeleta(int dmax) {
    if (dmax < 3) throw std::invalid_argument("demo-identical-skeleta: need --dmax >= 3");
    auto t0 = Clock::now();
    Report rep;
    rep.command = "demo-identical-skeleta";
    for (int d = 3; d <= dmax; ++d) {
        std::string tag = "d=" + std::to_string(d);
        auto wf = wedge_family(d);
        rep.inputs["P:" + std::to_string(d)] = digest(lattice_to_json(wf.p));
        rep.inputs["Q:" + std::to_string(d)] = digest(lattice_to_json(wf.q));
        auto low = poset_isomorphic(slice(wf.p, 0, d - 3).poset, slice(wf.q, 0, d - 3).poset);
        rep.claims.push_back(
            {tag + ": skeleta up to rank " + std::to_string(d - 3) + " agree", low.isomorphic(), {}});
        auto high = poset_isomorphic(slice(wf.p, 2, d - 1).poset, slice(wf.q, 2, d - 1).poset);
        rep.claims.push_back({tag + ": skeleta of ranks 2.." + std::to_string(d - 1) + " agree",
                              high.isomorphic(),
                              {}});
        auto full = poset_isomorphic(wf.p, wf.q);
        rep.claims.push_back({tag + ": full lattices differ",
                              !full.isomorphic(),
                              full.isomorphic() ? json{}
                                                : json{{"invariant", full.refuter.invariant}}});
        if (d == 4) {
            int mp = max_vertex_facet_incidence(wf.p), mq = max_vertex_facet_incidence(wf.q);
            rep.claims.push_back({tag + ": vertex-facet incidence maxima are 6 and 7",
                                  mp == 6 && mq == 7,
                                  json{{"p", mp}, {"q", mq}}});
        }
    }
    return emit(rep, t0);
}

bool vertex_links_are_cycles(const SimplicialComplex& x) {
    for (const auto& v : x.vertices()) {
        auto L = link(x, {v});
        if (L.dim() != 1 || !is_connected(L) || !is_pseudomanifold(L).pseudomanifold) return false;
    }
    return true;
}

int run_demo_pseudomanifold_pair(int dmax) {
    if (dmax < 3) throw std::invalid_argument("demo-pseudomanifold-pair: need --dmax >= 3");
    auto t0 = Clock::now();
    Report rep;
    rep.command = "demo-pseudomanifold-pair";
    for (int d = 3; d <= dmax; ++d) {
        std::string tag = "d=" + std::to_string(d);
        auto sp = subdivided_pair(d);
        rep.inputs["X:" + std::to_string(d)] = digest(complex_to_json(sp.x));
        rep.inputs["Y:" + std::to_string(d)] = digest(complex_to_json(sp.y));
        auto px = slice(face_poset(sp.x), 0, d - 2).poset;
        auto py = slice(face_poset(sp.y), 0, d - 2).poset;
        auto low = poset_isomorphic(px, py);
        rep.claims.push_back({tag + ": skeleta up to rank " + std::to_string(d - 2) +
                                  " agree with verified witness",
                              low.isomorphic() && verify_poset_witness(px, py, low.witness),
                              {}});
        auto full = complex_isomorphic(sp.x, sp.y);
        rep.claims.push_back({tag + ": full complexes differ",
                              !full.isomorphic(),
                              full.isomorphic() ? json{}
                                                : json{{"invariant", full.refuter.invariant}}});
        rep.claims.push_back(
            {tag + ": both normal", is_normal(sp.x).normal && is_normal(sp.y).normal, {}});
        rep.claims.push_back({tag + ": both orientable",
                              orientability(sp.x).orientable && orientability(sp.y).orientable,
                              {}});
        if (d == 3) {
            rep.claims.push_back({tag + ": euler characteristic 0 for both",
                                  euler_characteristic(sp.x) == 0 &&
                                      euler_characteristic(sp.y) == 0,
                                  {}});
            rep.claims.push_back({tag + ": every vertex link is a single cycle",
                                  vertex_links_are_cycles(sp.x) && vertex_links_are_cycles(sp.y),
                                  {}});
        }
    }
    return emit(rep, t0);
}

int run_demo_skeleton_reconstruction(const std::string& fixture, int k, int d) {
    auto t0 = Clock::now();
    Report rep;
    rep.command = "demo-skeleton-reconstruction";
    auto truth = fixture_lattice(fixture);
    int claimed = d > 0 ? d : truth.max_rank() + 1;
    auto b = bigraph_of(slice(truth, k - 1, k));
    rep.inputs[fixture] = digest(bigraph_to_json(b));
    Claim c{fixture + ": rank 0.." + std::to_string(k) + " skeleton recovered", false, {}};
    try {
        auto rec = reconstruct_skeleton(b, k, claimed);
        auto expect = skeleton_complex(truth, k);
        auto res = complex_isomorphic(rec, expect);
        c.pass = res.isomorphic() && verify_complex_witness(rec, expect, res.witness);
    } catch (const ReconstructionError& e) {
        c.detail = json{{"error", e.code()}, {"message", e.what()}};
    }
    rep.claims.push_back(std::move(c));
    return emit(rep, t0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"face lattice and skeleton reconstruction toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from a config file");
    app.add_option("--format", g_format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    int rc = 0;

    GenOpts gen_opts;
    auto* gen = app.add_subcommand("gen", "generate a family member or fixture as JSON");
    gen->fallthrough();
    gen->add_option("--family", gen_opts.family, "wedge|mod3|xy|fixture")
        ->required()
        ->check(CLI::IsMember({"wedge", "mod3", "xy", "fixture"}));
    gen->add_option("--d", gen_opts.d, "dimension parameter")->capture_default_str();
    gen->add_option("--member", gen_opts.member, "family member: w|p|q (wedge), x|y (xy)");
    gen->add_option("--name", gen_opts.name, "fixture name, e.g. simplex:4 or cyclic:6:9");
    gen->add_option("--out", gen_opts.out, "output path")->required();
    gen->add_option("--slice", gen_opts.slice,
                    "emit the incidence bigraph of consecutive ranks A:B instead");
    gen->add_flag("--dot", gen_opts.dot, "emit the 1-skeleton as DOT instead of JSON");
    gen->callback([&] { rc = run_gen(gen_opts); });

    std::string r4_in, r4_out;
    std::size_t r4_cap = 0;
    auto* r4 = app.add_subcommand("reconstruct4",
                                  "rebuild a 4-polytope lattice from edge-ridge incidences");
    r4->fallthrough();
    r4->add_option("--in", r4_in, "bigraph JSON (lowRank 1)")->required();
    r4->add_option("--out", r4_out, "write the reconstructed lattice here");
    r4->add_option("--max-candidate", r4_cap,
                   "cap on candidate ridge-set size; 0 = unlimited. Capping below the largest "
                   "facet loses candidates");
    r4->callback([&] { rc = run_reconstruct4(r4_in, r4_out, r4_cap); });

    std::string rs_in, rs_out;
    int rs_k = 0, rs_d = 0;
    auto* rs = app.add_subcommand("reconstruct-skeleton",
                                  "rebuild the k-skeleton from (k-1,k)-face incidences");
    rs->fallthrough();
    rs->add_option("--in", rs_in, "bigraph JSON (lowRank k-1)")->required();
    rs->add_option("--k", rs_k, "top rank of the skeleton")->required();
    rs->add_option("--d", rs_d, "claimed dimension of the source pseudomanifold (default k+2)");
    rs->add_option("--out", rs_out, "write the reconstructed complex here");
    rs->callback([&] { rc = run_reconstruct_skeleton(rs_in, rs_out, rs_k, rs_d); });

    std::string iso_a, iso_b, iso_kind;
    auto* iso = app.add_subcommand("iso", "decide isomorphism of two stored structures");
    iso->fallthrough();
    iso->add_option("--a", iso_a, "first input")->required();
    iso->add_option("--b", iso_b, "second input")->required();
    iso->add_option("--kind", iso_kind, "poset|complex|bigraph (default: sniff from content)")
        ->check(CLI::IsMember({"poset", "complex", "bigraph"}));
    iso->callback([&] { rc = run_iso(iso_a, iso_b, iso_kind); });

    std::string ck_in, ck_what;
    int ck_d = 0, ck_k = 0;
    auto* ck = app.add_subcommand("check", "verify properties of a stored complex");
    ck->fallthrough();
    ck->add_option("--in", ck_in, "complex JSON")->required();
    ck->add_option("--what", ck_what, "property to check")
        ->required()
        ->check(CLI::IsMember({"pseudomanifold", "normal", "orientable", "homology", "hypotheses"}));
    ck->add_option("--d", ck_d, "claimed dimension (hypotheses)");
    ck->add_option("--k", ck_k, "skeleton rank (hypotheses)");
    ck->callback([&] { rc = run_check(ck_in, ck_what, ck_d, ck_k); });

    std::vector<std::string> er_fixtures;
    bool er_corrupt = false;
    auto* der = app.add_subcommand("demo-edge-ridge",
                                   "round-trip 4-dimensional fixtures through edge-ridge data");
    der->fallthrough();
    auto* er_opt = der->add_option("--fixtures", er_fixtures, "comma-separated fixture names")
                       ->delimiter(',');
    der->add_flag("--corrupt", er_corrupt, "also check the diagnostic on a corrupted input");
    der->callback([&] {
        std::vector<std::string> names;
        if (er_opt->count() == 0)
            names = {"simplex:4", "cube:4", "crosspoly:4", "wedgeP:4", "wedgeQ:4"};
        else
            for (auto& n : er_fixtures)
                if (!n.empty()) names.push_back(n);
        rc = run_demo_edge_ridge(names, er_corrupt);
    });

    int is_dmax = 5;
    auto* dis = app.add_subcommand("demo-identical-skeleta",
                                   "same outer skeleta, different lattices, for 3 <= d <= dmax");
    dis->fallthrough();
    dis->add_option("--dmax", is_dmax, "largest dimension")->capture_default_str();
    dis->callback([&] { rc = run_demo_identical_skeleta(is_dmax); });

    int pp_dmax = 4;
    auto* dpp = app.add_subcommand(
        "demo-pseudomanifold-pair",
        "subdivided pseudomanifold pairs with equal skeleta, for 3 <= d <= dmax");
    dpp->fallthrough();
    dpp->add_option("--dmax", pp_dmax, "largest dimension")->capture_default_str();
    dpp->callback([&] { rc = run_demo_pseudomanifold_pair(pp_dmax); });

    std::string sk_fixture = "crosspoly:4";
    int sk_k = 2, sk_d = 0;
    auto* dsk = app.add_subcommand("demo-skeleton-reconstruction",
                                   "strip a fixture to (k-1,k) incidences and rebuild");
    dsk->fallthrough();
    dsk->add_option("--fixture", sk_fixture, "fixture name")->capture_default_str();
    dsk->add_option("--k", sk_k, "skeleton rank")->capture_default_str();
    dsk->add_option("--d", sk_d, "claimed dimension (default: the fixture's)");
    dsk->callback([&] { rc = run_demo_skeleton_reconstruction(sk_fixture, sk_k, sk_d); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ReconstructionError& e) {
        json d{{"error", e.code()}, {"message", e.what()}};
        for (const auto& [key, value] : e.detail()) d["detail"][key] = value;
        std::cout << d.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json d{{"error", "invalid-input"}, {"message", e.what()}};
        std::cout << d.dump(2) << "\n";
        return 2;
    }
    return rc;
}
