#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fmc/graph.hpp"
#include "json.hpp"

using namespace fmc;

namespace {

// Mutate the serialized form of a builtin and feed it back to the parser.
nlohmann::json as_json(const FullereneGraph& g) {
    return nlohmann::json::parse(serialize(g));
}

FullereneGraph reparse(const nlohmann::json& doc) {
    return parse_fullerene(doc.dump(), "mutant");
}

}  // namespace

TEST_CASE("builtin shapes") {
    for (auto [name, n] : std::vector<std::pair<const char*, int>>{
             {"C20", 20}, {"C24", 24}, {"C26", 26}}) {
        const FullereneGraph g = builtin(name);
        CHECK(g.id() == name);
        CHECK(g.vertex_count() == n);
        CHECK(g.pentagon_count() == 12);
        CHECK(g.hexagon_count() == n / 2 - 10);
        CHECK(g.faces().size() == static_cast<std::size_t>(n / 2 + 2));
        CHECK(g.edges().size() == static_cast<std::size_t>(3 * n / 2));
    }
    CHECK(builtin("c24").vertex_count() == 24);  // case-insensitive
    CHECK_THROWS_AS(builtin("C60"), std::invalid_argument);
    CHECK_THROWS_AS(builtin(""), std::invalid_argument);
}

TEST_CASE("three-regularity from the edge list") {
    for (const char* name : {"C20", "C24", "C26"}) {
        const FullereneGraph g = builtin(name);
        std::map<int, int> degree;
        std::set<std::pair<int, int>> seen;
        for (auto [a, b] : g.edges()) {
            CHECK(a < b);
            CHECK(seen.insert({a, b}).second);  // no duplicates
            ++degree[a];
            ++degree[b];
        }
        for (int v = 1; v <= g.vertex_count(); ++v) {
            CHECK(degree[v] == 3);
        }
    }
}

TEST_CASE("every face boundary step is an edge") {
    const FullereneGraph g = builtin("C26");
    std::set<std::pair<int, int>> edges(g.edges().begin(), g.edges().end());
    for (const Face& f : g.faces()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            const int a = f[i];
            const int b = f[(i + 1) % f.size()];
            CHECK(edges.count({std::min(a, b), std::max(a, b)}) == 1);
        }
    }
}

TEST_CASE("vertex-to-face index agrees with the face list") {
    for (const char* name : {"C20", "C24", "C26"}) {
        const FullereneGraph g = builtin(name);
        for (int v = 1; v <= g.vertex_count(); ++v) {
            const std::vector<int>& fs = g.faces_of_vertex(v);
            CHECK(fs.size() == 3);
            for (int fi : fs) {
                const Face& f = g.faces()[static_cast<std::size_t>(fi)];
                CHECK(std::count(f.begin(), f.end(), v) == 1);
            }
        }
    }
}

TEST_CASE("incidence profile sums") {
    for (const char* name : {"C20", "C24", "C26"}) {
        const FullereneGraph g = builtin(name);
        const IncidenceProfile prof = incidence_profile(g);
        const int n = g.vertex_count();
        REQUIRE(prof.hex_multiplicity.size() == static_cast<std::size_t>(n));
        REQUIRE(prof.pent_multiplicity.size() == static_cast<std::size_t>(n));

        long long hex_total = 0;
        long long pent_total = 0;
        for (int i = 0; i < n; ++i) {
            const int h = prof.hex_multiplicity[static_cast<std::size_t>(i)];
            const int p = prof.pent_multiplicity[static_cast<std::size_t>(i)];
            CHECK(h + p == 3);
            CHECK(h >= 0);
            CHECK(p >= 0);
            hex_total += h;
            pent_total += p;
        }
        CHECK(hex_total == 6LL * g.hexagon_count());
        CHECK(pent_total == 5LL * 12);

        // Count again straight off the face list.
        std::vector<int> hex_again(static_cast<std::size_t>(n), 0);
        for (const Face& f : g.faces()) {
            if (!FullereneGraph::is_pentagon(f)) {
                for (int v : f) {
                    ++hex_again[static_cast<std::size_t>(v - 1)];
                }
            }
        }
        CHECK(hex_again == prof.hex_multiplicity);
    }
}

TEST_CASE("serialize round trip") {
    for (const char* name : {"C20", "C24", "C26"}) {
        const FullereneGraph g = builtin(name);
        const FullereneGraph h = parse_fullerene(serialize(g), g.id());
        CHECK(h.id() == g.id());
        CHECK(h.vertex_count() == g.vertex_count());
        CHECK(h.faces() == g.faces());
    }
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(parse_fullerene("not json at all", "x"), ParseError);
    CHECK_THROWS_AS(parse_fullerene("{\"n\": 24}", "x"), ParseError);
    CHECK_THROWS_AS(parse_fullerene("{\"faces\": []}", "x"), ParseError);
    CHECK_THROWS_AS(parse_fullerene("{\"n\": \"24\", \"faces\": []}", "x"), ParseError);
    CHECK_THROWS_AS(parse_fullerene("{\"n\": 24, \"faces\": 7}", "x"), ParseError);
    CHECK_THROWS_AS(parse_fullerene("{\"n\": 24, \"faces\": [[1,2,3,\"a\",5]]}", "x"), ParseError);
    CHECK_THROWS_AS(parse_fullerene("[]", "x"), ParseError);
}

TEST_CASE("validation names structural breakage") {
    const nlohmann::json base = as_json(builtin("C24"));

    {
        nlohmann::json doc = base;
        doc["faces"][0].erase(4);  // pentagon becomes a square
        CHECK_THROWS_AS(reparse(doc), ValidationError);
    }
    {
        nlohmann::json doc = base;
        doc["faces"][0][1] = doc["faces"][0][0];  // repeated vertex in a face
        CHECK_THROWS_AS(reparse(doc), ValidationError);
    }
    {
        nlohmann::json doc = base;
        doc["faces"].erase(0);  // face count off, vertices lose an incidence
        CHECK_THROWS_AS(reparse(doc), ValidationError);
    }
    {
        nlohmann::json doc = base;
        doc["faces"][0][0] = 25;  // vertex id out of range
        CHECK_THROWS_AS(reparse(doc), ValidationError);
    }
    {
        nlohmann::json doc = base;
        doc["faces"][0][0] = 0;
        CHECK_THROWS_AS(reparse(doc), ValidationError);
    }
    {
        // Swapping one vertex for another keeps lengths legal but breaks the
        // incidence and edge-sharing counts.
        nlohmann::json doc = base;
        const int a = doc["faces"][0][0];
        const int b = a == 1 ? 2 : 1;
        bool contains_b = false;
        for (const auto& v : doc["faces"][0]) {
            contains_b = contains_b || v.get<int>() == b;
        }
        if (!contains_b) {
            doc["faces"][0][0] = b;
            CHECK_THROWS_AS(reparse(doc), ValidationError);
        }
    }
    {
        nlohmann::json doc = base;
        doc["n"] = 26;  // n disagrees with the face data
        CHECK_THROWS_AS(reparse(doc), ValidationError);
    }
}

TEST_CASE("face orientation does not matter") {
    nlohmann::json doc = as_json(builtin("C24"));
    auto& f0 = doc["faces"][0];
    std::vector<int> reversed(f0.rbegin(), f0.rend());
    f0 = reversed;
    const FullereneGraph g = reparse(doc);
    CHECK(g.vertex_count() == 24);
    CHECK(g.edges() == builtin("C24").edges());
}
