#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fmc {

// Graph file is syntactically malformed (not valid JSON / wrong field types).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structural invariant of the fullerene face model is violated. The message
// names the first violated invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One face, as 1-based vertex ids in cyclic boundary order.
using Face = std::vector<int>;

// Face structure of a fullerene: n vertices, 12 pentagons, n/2 - 10 hexagons.
// Validation is eager: a constructed graph always satisfies every invariant
// (face lengths 5 or 6, no repeats, exact face counts, every vertex in
// exactly 3 faces, every boundary edge shared by exactly 2 faces).
// Immutable after construction; safe to share across threads.
class FullereneGraph {
public:
    FullereneGraph(std::string id, int n, std::vector<Face> faces);

    const std::string& id() const { return id_; }
    int vertex_count() const { return n_; }
    const std::vector<Face>& faces() const { return faces_; }

    int pentagon_count() const { return pentagons_; }
    int hexagon_count() const { return hexagons_; }
    static bool is_pentagon(const Face& f) { return f.size() == 5; }

    // Undirected edge list (a < b), derived from cyclic face boundaries.
    // 3-regular: 3n/2 edges.
    std::vector<std::pair<int, int>> edges() const;

    // Indices into faces() of the (exactly 3) faces containing vertex v (1-based).
    const std::vector<int>& faces_of_vertex(int v) const;

private:
    void validate() const;

    std::string id_;
    int n_ = 0;
    std::vector<Face> faces_;
    int pentagons_ = 0;
    int hexagons_ = 0;
    std::vector<std::vector<int>> vertex_faces_;  // [v-1] -> face indices
};

// Per-vertex face-kind multiplicities: m_v hexagons, p_v = 3 - m_v pentagons.
struct IncidenceProfile {
    std::vector<int> hex_multiplicity;   // index 0 = vertex 1
    std::vector<int> pent_multiplicity;
};

// Parse + validate a JSON graph file: {"n": <int>, "faces": [[...], ...]},
// 1-based vertex ids, faces in cyclic boundary order.
// Throws ParseError on malformed input, ValidationError naming the first
// violated invariant otherwise.
FullereneGraph parse_fullerene(const std::string& text, const std::string& id = "file");

// Serialize back to the graph-file JSON schema. parse(serialize(g)) == g.
std::string serialize(const FullereneGraph& g);

// Embedded face structures: "C20" (dodecahedron), "C24", "C26".
// Name matching is case-insensitive. Throws std::invalid_argument otherwise.
FullereneGraph builtin(const std::string& name);

IncidenceProfile incidence_profile(const FullereneGraph& g);

}  // namespace fmc
