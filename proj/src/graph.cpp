#include "fmc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

namespace fmc {

FullereneGraph::FullereneGraph(std::string id, int n, std::vector<Face> faces)
    : id_(std::move(id)), n_(n), faces_(std::move(faces)) {
    validate();
    for (const Face& f : faces_) {
        if (is_pentagon(f)) {
            ++pentagons_;
        } else {
            ++hexagons_;
        }
    }
    vertex_faces_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t fi = 0; fi < faces_.size(); ++fi) {
        for (int v : faces_[fi]) {
            vertex_faces_[static_cast<std::size_t>(v - 1)].push_back(static_cast<int>(fi));
        }
    }
}

void FullereneGraph::validate() const {
    if (n_ <= 0 || n_ % 2 != 0) {
        throw ValidationError("vertex count " + std::to_string(n_) + " is not a positive even integer");
    }
    for (std::size_t fi = 0; fi < faces_.size(); ++fi) {
        const Face& f = faces_[fi];
        if (f.size() != 5 && f.size() != 6) {
            throw ValidationError("face " + std::to_string(fi + 1) + " has length " +
                                  std::to_string(f.size()) + ", expected 5 or 6");
        }
        for (int v : f) {
            if (v < 1 || v > n_) {
                throw ValidationError("face " + std::to_string(fi + 1) + " contains vertex " +
                                      std::to_string(v) + " outside 1.." + std::to_string(n_));
            }
        }
        Face sorted = f;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ValidationError("face " + std::to_string(fi + 1) + " contains a repeated vertex");
        }
    }
    int pent = 0, hex = 0;
    for (const Face& f : faces_) {
        (f.size() == 5 ? pent : hex)++;
    }
    if (pent != 12) {
        throw ValidationError(std::to_string(pent) + " pentagons, expected 12");
    }
    const int expected_hex = n_ / 2 - 10;
    if (hex != expected_hex) {
        throw ValidationError(std::to_string(hex) + " hexagons, expected " + std::to_string(expected_hex));
    }
    if (static_cast<int>(faces_.size()) != n_ / 2 + 2) {
        throw ValidationError(std::to_string(faces_.size()) + " faces, expected " +
                              std::to_string(n_ / 2 + 2));
    }
    std::vector<int> appearances(static_cast<std::size_t>(n_), 0);
    for (const Face& f : faces_) {
        for (int v : f) {
            ++appearances[static_cast<std::size_t>(v - 1)];
        }
    }
    for (int v = 1; v <= n_; ++v) {
        const int a = appearances[static_cast<std::size_t>(v - 1)];
        if (a != 3) {
            throw ValidationError("vertex " + std::to_string(v) + " appears in " +
                                  std::to_string(a) + " faces, expected 3");
        }
    }
    std::map<std::pair<int, int>, int> edge_count;
    for (const Face& f : faces_) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            const int a = f[i];
            const int b = f[(i + 1) % f.size()];
            ++edge_count[{std::min(a, b), std::max(a, b)}];
        }
    }
    for (const auto& [e, c] : edge_count) {
        if (c != 2) {
            throw ValidationError("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                  ") bounds " + std::to_string(c) + " faces, expected 2");
        }
    }
}

std::vector<std::pair<int, int>> FullereneGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(3 * n_ / 2));
    for (const Face& f : faces_) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            const int a = f[i];
            const int b = f[(i + 1) % f.size()];
            out.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const std::vector<int>& FullereneGraph::faces_of_vertex(int v) const {
    return vertex_faces_.at(static_cast<std::size_t>(v - 1));
}

FullereneGraph parse_fullerene(const std::string& text, const std::string& id) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("faces")) {
        throw ParseError("graph file must be an object with \"n\" and \"faces\"");
    }
    if (!doc["n"].is_number_integer()) {
        throw ParseError("\"n\" must be an integer");
    }
    if (!doc["faces"].is_array()) {
        throw ParseError("\"faces\" must be an array of arrays");
    }
    const int n = doc["n"].get<int>();
    std::vector<Face> faces;
    for (const auto& jf : doc["faces"]) {
        if (!jf.is_array()) {
            throw ParseError("\"faces\" must be an array of arrays");
        }
        Face f;
        for (const auto& jv : jf) {
            if (!jv.is_number_integer()) {
                throw ParseError("face entries must be integers");
            }
            f.push_back(jv.get<int>());
        }
        faces.push_back(std::move(f));
    }
    return FullereneGraph(id, n, std::move(faces));
}

std::string serialize(const FullereneGraph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    doc["faces"] = g.faces();
    return doc.dump();
}

namespace {

// Face tables of the embedded instances, vertex ids 1-based, each face in
// cyclic boundary order (every consecutive pair is an edge shared with
// exactly one other face). Rows are arranged so that reading the table
// BACKWARDS walks the surface coherently (each face sharing vertices with
// the ones after it); the verification enumerator processes faces in
// reverse input order and prunes far better on such a walk.

const std::vector<Face> kC24Faces = {
    {17, 18, 9, 8, 16},
    {15, 16, 8, 7, 14},
    {13, 14, 7, 12, 24},
    {7, 8, 9, 10, 11, 12},
    {23, 24, 12, 11, 22},
    {21, 22, 11, 10, 20},
    {19, 20, 10, 9, 18},
    {2, 3, 19, 18, 17},
    {1, 2, 17, 16, 15},
    {6, 1, 15, 14, 13},
    {5, 6, 13, 24, 23},
    {4, 5, 23, 22, 21},
    {3, 4, 21, 20, 19},
    {1, 2, 3, 4, 5, 6},
};

const std::vector<Face> kC26Faces = {
    {7, 8, 20, 19, 18},
    {17, 18, 19, 26, 25},
    {19, 20, 21, 22, 26},
    {22, 23, 24, 25, 26},
    {11, 12, 23, 22, 21},
    {8, 9, 10, 11, 21, 20},
    {1, 6, 7, 8, 9},
    {1, 2, 3, 10, 9},
    {3, 10, 11, 12, 13},
    {15, 16, 17, 25, 24},
    {12, 13, 14, 15, 24, 23},
    {2, 3, 13, 14, 4},
    {4, 5, 16, 15, 14},
    {1, 2, 4, 5, 6},
    {5, 6, 7, 18, 17, 16},
};

// Dodecahedron, numbered ring by ring: top pentagon 1-5, upper middle ring
// 6-10 (vertex 5+i below vertex i), lower middle ring 11-15, bottom
// pentagon 16-20. All C20 results are numbering-independent.
const std::vector<Face> kC20Faces = {
    {16, 17, 18, 19, 20},
    {6, 11, 16, 20, 15},
    {10, 15, 20, 19, 14},
    {9, 14, 19, 18, 13},
    {8, 13, 18, 17, 12},
    {7, 12, 17, 16, 11},
    {5, 1, 6, 15, 10},
    {4, 5, 10, 14, 9},
    {3, 4, 9, 13, 8},
    {2, 3, 8, 12, 7},
    {1, 2, 7, 11, 6},
    {1, 2, 3, 4, 5},
};

}  // namespace

FullereneGraph builtin(const std::string& name) {
    std::string up = name;
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (up == "C20") {
        return FullereneGraph("C20", 20, kC20Faces);
    }
    if (up == "C24") {
        return FullereneGraph("C24", 24, kC24Faces);
    }
    if (up == "C26") {
        return FullereneGraph("C26", 26, kC26Faces);
    }
    throw std::invalid_argument("unknown builtin graph \"" + name + "\" (expected C20, C24 or C26)");
}

IncidenceProfile incidence_profile(const FullereneGraph& g) {
    IncidenceProfile p;
    p.hex_multiplicity.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    p.pent_multiplicity.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Face& f : g.faces()) {
        for (int v : f) {
            if (FullereneGraph::is_pentagon(f)) {
                ++p.pent_multiplicity[static_cast<std::size_t>(v - 1)];
            } else {
                ++p.hex_multiplicity[static_cast<std::size_t>(v - 1)];
            }
        }
    }
    return p;
}

}  // namespace fmc
