#pragma once

// JSON (de)serialization for the three file formats plus report payloads.
// Output is byte-deterministic: object keys are sorted (nlohmann's ordered
// map over std::map) and arrays follow each type's canonical storage order.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "complex.hpp"
#include "homology.hpp"
#include "isomorphism.hpp"
#include "poset.hpp"

namespace skelrec {

using json = nlohmann::json;

inline json lattice_to_json(const GradedFacePoset& p) {
    json j;
    j["ranks"] = p.max_rank() + 1;
    j["faces"] = json::array();
    for (const auto& e : p.elements()) j["faces"].push_back({{"id", e.id}, {"rank", e.rank}});
    j["covers"] = json::array();
    for (const auto& [lo, hi] : p.covers_by_id()) j["covers"].push_back({lo, hi});
    return j;
}

inline GradedFacePoset lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("faces") || !j.contains("covers"))
        throw std::invalid_argument("lattice json: expected object with 'faces' and 'covers'");
    std::vector<PosetElement> elems;
    for (const auto& f : j.at("faces"))
        elems.push_back({f.at("id").get<std::string>(), f.at("rank").get<int>()});
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2)
            throw std::invalid_argument("lattice json: covers must be [low, high] pairs");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    GradedFacePoset p(std::move(elems), covers);
    if (j.contains("ranks") && j.at("ranks").get<int>() != p.max_rank() + 1)
        throw std::invalid_argument("lattice json: 'ranks' disagrees with the face list");
    return p;
}

inline json bigraph_to_json(const IncidenceBigraph& b) {
    json j;
    j["lowRank"] = b.low_rank();
    j["low"] = b.low();
    j["high"] = b.high();
    j["incident"] = json::array();
    for (const auto& [lo, hi] : b.pairs_by_id()) j["incident"].push_back({lo, hi});
    return j;
}

inline IncidenceBigraph bigraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("low") || !j.contains("high") || !j.contains("incident"))
        throw std::invalid_argument("bigraph json: expected 'lowRank', 'low', 'high', 'incident'");
    std::vector<std::string> low = j.at("low").get<std::vector<std::string>>();
    std::vector<std::string> high = j.at("high").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> inc;
    for (const auto& c : j.at("incident")) {
        if (!c.is_array() || c.size() != 2)
            throw std::invalid_argument("bigraph json: incident must be [low, high] pairs");
        inc.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return IncidenceBigraph(j.value("lowRank", 0), std::move(low), std::move(high), inc);
}

inline json complex_to_json(const SimplicialComplex& x) {
    json j;
    j["vertices"] = x.vertices();
    j["facets"] = json::array();
    for (const auto& f : x.facets()) j["facets"].push_back(x.tokens(f));
    return j;
}

inline SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("facets"))
        throw std::invalid_argument("complex json: expected object with 'vertices' and 'facets'");
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<std::string>>());
    auto x = SimplicialComplex::from_facets(facets);
    if (j.contains("vertices")) {
        auto declared = j.at("vertices").get<std::vector<std::string>>();
        std::sort(declared.begin(), declared.end());
        if (declared != x.vertices())
            throw std::invalid_argument("complex json: 'vertices' disagrees with the facet union");
    }
    return x;
}

inline json iso_result_to_json(const IsoResult& r) {
    json j;
    j["verdict"] = r.isomorphic() ? "isomorphic" : "not-isomorphic";
    if (r.isomorphic()) {
        j["witness"] = json::object();
        for (const auto& [a, b] : r.witness) j["witness"][a] = b;
    } else {
        j["refuter"] = {{"invariant", r.refuter.invariant}};
        if (!r.refuter.lhs.empty()) j["refuter"]["lhs"] = r.refuter.lhs;
        if (!r.refuter.rhs.empty()) j["refuter"]["rhs"] = r.refuter.rhs;
    }
    return j;
}

inline json link_check_to_json(const LinkCheck& c) {
    return json{{"face", c.face}, {"betti", c.betti}, {"pass", c.pass}};
}

// FNV-1a, for input digests in command reports.
inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << bytes;
}

inline json load_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("'" + path + "': " + e.what());
    }
}

inline void save_json(const std::string& path, const json& j) {
    write_file(path, j.dump(2) + "\n");
}

// DOT export of a 1-skeleton (rank 0/1 of a lattice, or the vertices and
// edges of a complex).
inline std::string skeleton_dot(const GradedFacePoset& p, const std::string& name = "skeleton") {
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    for (const auto& e : p.elements())
        if (e.rank == 0) out << "  \"" << e.id << "\";\n";
    auto below = p.down_closures();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.element(static_cast<int>(i)).rank != 1) continue;
        std::vector<std::string> ends;
        below[i].for_each_set([&](std::size_t j) {
            if (p.element(static_cast<int>(j)).rank == 0)
                ends.push_back(p.element(static_cast<int>(j)).id);
        });
        if (ends.size() == 2) out << "  \"" << ends[0] << "\" -- \"" << ends[1] << "\";\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string skeleton_dot(const SimplicialComplex& x, const std::string& name = "skeleton") {
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    for (const auto& v : x.vertices()) out << "  \"" << v << "\";\n";
    for (const auto& e : x.faces_of_dim(1))
        out << "  \"" << x.vertex(e[0]) << "\" -- \"" << x.vertex(e[1]) << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace skelrec
