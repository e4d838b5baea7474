#include "fmc/solution_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace fmc {

std::string format_solution_line(const Configuration& c) {
    std::string out;
    out.reserve(c.size() * 3);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

Configuration parse_solution_line(const std::string& line) {
    Configuration c;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) comma = line.size();
        const std::string tok = line.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            c.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad label '" + tok + "' in solution line");
        }
        pos = comma + 1;
        if (comma == line.size()) break;
    }
    return c;
}

void write_solution_stream(std::ostream& os, const std::vector<Configuration>& cs) {
    for (const auto& c : cs) os << format_solution_line(c) << '\n';
}

std::vector<Configuration> read_solution_stream(std::istream& is) {
    std::vector<Configuration> out;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_solution_line(line));
    }
    return out;
}

std::string count_table_json(const CountTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const CountRow& r : t.rows) {
        rows.push_back({{"sp", r.pair.sp},
                        {"sh", r.pair.sh},
                        {"count", r.count},
                        {"partial", r.partial},
                        {"nodes", r.nodes}});
    }
    nlohmann::json j{{"graph", t.graph_id}, {"n", t.n}, {"rows", rows}};
    if (!t.note.empty()) j["note"] = t.note;
    return j.dump(2) + "\n";
}

std::string count_table_csv(const CountTable& t) {
    std::string out = "sp,sh,count,partial,nodes\n";
    for (const CountRow& r : t.rows) {
        out += std::to_string(r.pair.sp) + ',' + std::to_string(r.pair.sh) + ',' +
               std::to_string(r.count) + ',' + (r.partial ? "1" : "0") + ',' +
               std::to_string(r.nodes) + '\n';
    }
    return out;
}

std::string manifest_json(const RunManifest& m) {
    nlohmann::json j{{"command", m.command},
                     {"graph", m.graph_source},
                     {"parameters", m.parameters},
                     {"wall_ms", m.wall_ms},
                     {"workers", m.workers},
                     {"outputs", m.outputs},
                     {"partial", m.partial}};
    return j.dump(2) + "\n";
}

std::string write_manifest(const RunManifest& m, const std::string& dir) {
    std::string path = dir.empty() ? std::string(".") : dir;
    if (path.back() != '/') path += '/';
    path += "run-manifest.json";
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << manifest_json(m);
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path);
    return path;
}

}  // namespace fmc
