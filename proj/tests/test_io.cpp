#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>

#include "skelrec/constructions.hpp"
#include "skelrec/io.hpp"
#include "skelrec/isomorphism.hpp"

using namespace skelrec;

TEST_CASE("lattice json round trip and shape") {
    auto p = cube_lattice(3);
    json j = lattice_to_json(p);
    CHECK(j["ranks"] == 3);
    CHECK(j["faces"].size() == 8 + 12 + 6);
    CHECK(j["covers"].size() == 24 + 24);
    CHECK(lattice_from_json(j) == p);
    CHECK(j.dump(2) == lattice_to_json(p).dump(2));  // byte-deterministic
}

TEST_CASE("lattice json validation") {
    CHECK_THROWS_AS(lattice_from_json(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(lattice_from_json(json{{"faces", json::array()}}), std::invalid_argument);
    json j = lattice_to_json(face_poset(simplex_boundary(3)));
    j["ranks"] = 7;
    CHECK_THROWS_AS(lattice_from_json(j), std::invalid_argument);
    j = lattice_to_json(face_poset(simplex_boundary(3)));
    j["covers"].push_back("oops");
    CHECK_THROWS_AS(lattice_from_json(j), std::invalid_argument);
}

TEST_CASE("bigraph json round trip") {
    auto b = bigraph_of(slice(face_poset(simplex_boundary(4)), 1, 2));
    json j = bigraph_to_json(b);
    CHECK(j["lowRank"] == 1);
    CHECK(j["incident"].size() == b.pairs().size());
    CHECK(bigraph_from_json(j) == b);

    j.erase("lowRank");  // defaults to 0; ids and incidences survive
    auto b0 = bigraph_from_json(j);
    CHECK(b0.low_rank() == 0);
    CHECK(b0.pairs() == b.pairs());
    j.erase("incident");
    CHECK_THROWS_AS(bigraph_from_json(j), std::invalid_argument);
}

TEST_CASE("complex json round trip and vertex cross-check") {
    auto x = mod3_pseudomanifold(2);
    json j = complex_to_json(x);
    CHECK(complex_from_json(j) == x);

    // declared vertices may come in any order, but not with wrong content
    std::reverse(j["vertices"].begin(), j["vertices"].end());
    CHECK(complex_from_json(j) == x);
    j["vertices"].push_back("ghost");
    CHECK_THROWS_AS(complex_from_json(j), std::invalid_argument);
    CHECK_THROWS_AS(complex_from_json(json{{"vertices", json::array()}}), std::invalid_argument);
}

TEST_CASE("iso result json") {
    auto same = poset_isomorphic(face_poset(simplex_boundary(3)), face_poset(simplex_boundary(3)));
    json j = iso_result_to_json(same);
    CHECK(j["verdict"] == "isomorphic");
    CHECK(j["witness"].size() == face_poset(simplex_boundary(3)).size());

    auto diff = poset_isomorphic(face_poset(simplex_boundary(3)), face_poset(simplex_boundary(4)));
    j = iso_result_to_json(diff);
    CHECK(j["verdict"] == "not-isomorphic");
    CHECK(j["refuter"].contains("invariant"));
    CHECK_FALSE(j.contains("witness"));
}

TEST_CASE("link check json") {
    LinkCheck c{{"1", "2"}, {1, 0, 1}, true};
    json j = link_check_to_json(c);
    CHECK(j["face"] == json::array({"1", "2"}));
    CHECK(j["betti"] == json::array({1, 0, 1}));
    CHECK(j["pass"] == true);
}

TEST_CASE("fnv1a digests") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("file round trip and parse diagnostics") {
    const std::string path = "io_test_tmp.json";
    save_json(path, json{{"k", 1}});
    CHECK(read_file(path) == "{\n  \"k\": 1\n}\n");
    CHECK(load_json(path) == json{{"k", 1}});
    write_file(path, "{nope");
    CHECK_THROWS_AS(load_json(path), std::invalid_argument);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file(path), std::runtime_error);
}

TEST_CASE("dot export of a path graph") {
    auto x = SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}});
    const std::string expect =
        "graph \"p\" {\n"
        "  \"a\";\n"
        "  \"b\";\n"
        "  \"c\";\n"
        "  \"a\" -- \"b\";\n"
        "  \"b\" -- \"c\";\n"
        "}\n";
    CHECK(skeleton_dot(x, "p") == expect);
    CHECK(skeleton_dot(face_poset(x), "p") == expect);
}
