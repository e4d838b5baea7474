#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fmc/search.hpp"

namespace fmc {

// One solution per line: comma-separated labels, vertex 1 first.
std::string format_solution_line(const Configuration& c);

// Inverse of format_solution_line. Throws ParseError on malformed input.
Configuration parse_solution_line(const std::string& line);

void write_solution_stream(std::ostream& os, const std::vector<Configuration>& cs);

// Reads every nonempty line; does not check the permutation property (the
// caller decides how much to trust the file).
std::vector<Configuration> read_solution_stream(std::istream& is);

std::string count_table_json(const CountTable& t);

// Header sp,sh,count,partial,nodes; partial as 0/1. The empty-table note
// only appears in the JSON form.
std::string count_table_csv(const CountTable& t);

// Written as run-manifest.json next to every artifact-producing command.
struct RunManifest {
    std::string command;
    std::string graph_source;            // builtin name or file path
    std::string parameters;              // normalized flag summary
    std::uint64_t wall_ms = 0;
    int workers = 0;
    std::vector<std::string> outputs;    // every artifact written by the run
    bool partial = false;                // any enumeration hit its node budget
};

std::string manifest_json(const RunManifest& m);

// Writes manifest_json to <dir>/run-manifest.json ("." for an empty dir).
// Returns the path written. Throws std::runtime_error on I/O failure.
std::string write_manifest(const RunManifest& m, const std::string& dir);

}  // namespace fmc
