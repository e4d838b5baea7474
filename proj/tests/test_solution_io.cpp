#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fmc/solution_io.hpp"
#include "json.hpp"

using namespace fmc;

TEST_CASE("solution line round trip") {
    const Configuration c = {14, 3, 1, 22, 7, 9};
    const std::string line = format_solution_line(c);
    CHECK(line == "14,3,1,22,7,9");
    CHECK(parse_solution_line(line) == c);
    CHECK(parse_solution_line("5") == Configuration{5});
}

TEST_CASE("solution line rejects junk") {
    CHECK_THROWS_AS(parse_solution_line("1,2,x"), ParseError);
    CHECK_THROWS_AS(parse_solution_line("1,,3"), ParseError);
    CHECK_THROWS_AS(parse_solution_line(""), ParseError);
    CHECK_THROWS_AS(parse_solution_line("1, 2a"), ParseError);
    CHECK_THROWS_AS(parse_solution_line("99999999999999999999"), ParseError);
}

TEST_CASE("stream round trip tolerates blank lines and CRLF") {
    const std::vector<Configuration> cs = {{1, 2, 3}, {3, 2, 1}, {2, 1, 3}};
    std::ostringstream os;
    write_solution_stream(os, cs);

    std::istringstream is(os.str());
    CHECK(read_solution_stream(is) == cs);

    std::istringstream messy("1,2,3\r\n\n3,2,1\r\n\n\n2,1,3\n");
    CHECK(read_solution_stream(messy) == cs);
}

TEST_CASE("count table JSON carries all rows and the note only when set") {
    CountTable t;
    t.graph_id = "C24";
    t.n = 24;
    t.rows.push_back({{57, 108}, 576, false, 12345});
    t.rows.push_back({{58, 102}, 936, true, 99});

    const nlohmann::json doc = nlohmann::json::parse(count_table_json(t));
    CHECK(doc["graph"] == "C24");
    CHECK(doc["n"] == 24);
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["sp"] == 57);
    CHECK(doc["rows"][0]["sh"] == 108);
    CHECK(doc["rows"][0]["count"] == 576);
    CHECK(doc["rows"][0]["partial"] == false);
    CHECK(doc["rows"][0]["nodes"] == 12345);
    CHECK(doc["rows"][1]["partial"] == true);
    CHECK_FALSE(doc.contains("note"));

    t.rows.clear();
    t.note = "nothing to count";
    const nlohmann::json empty = nlohmann::json::parse(count_table_json(t));
    CHECK(empty["rows"].empty());
    CHECK(empty["note"] == "nothing to count");
}

TEST_CASE("count table CSV") {
    CountTable t;
    t.graph_id = "C26";
    t.n = 26;
    t.rows.push_back({{73, 59}, 0, false, 154703});
    t.rows.push_back({{72, 63}, 84, true, 1000});
    CHECK(count_table_csv(t) ==
          "sp,sh,count,partial,nodes\n"
          "73,59,0,0,154703\n"
          "72,63,84,1,1000\n");

    CountTable empty;
    CHECK(count_table_csv(empty) == "sp,sh,count,partial,nodes\n");
}

TEST_CASE("manifest JSON and file placement") {
    RunManifest m;
    m.command = "count";
    m.graph_source = "c24";
    m.parameters = "workers=4 node_budget=1000";
    m.wall_ms = 77;
    m.workers = 4;
    m.outputs = {"a.json", "b.csv"};
    m.partial = true;

    const nlohmann::json doc = nlohmann::json::parse(manifest_json(m));
    CHECK(doc["command"] == "count");
    CHECK(doc["graph"] == "c24");
    CHECK(doc["parameters"] == "workers=4 node_budget=1000");
    CHECK(doc["wall_ms"] == 77);
    CHECK(doc["workers"] == 4);
    CHECK(doc["outputs"] == nlohmann::json({"a.json", "b.csv"}));
    CHECK(doc["partial"] == true);

    const auto dir = std::filesystem::temp_directory_path() / "fmc_io_test";
    std::filesystem::create_directories(dir);
    const std::string path = write_manifest(m, dir.string());
    CHECK(path == (dir / "run-manifest.json").string());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(nlohmann::json::parse(buf.str()) == doc);
    std::filesystem::remove_all(dir);
}
