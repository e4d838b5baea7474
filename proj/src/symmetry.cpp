#include "fmc/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fmc {
namespace {

VertexPermutation identity_perm(int n) {
    VertexPermutation id(n);
    for (int i = 0; i < n; ++i) id[i] = i + 1;
    return id;
}

bool is_permutation_1n(const VertexPermutation& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n + 1, 0);
    for (int x : p) {
        if (x < 1 || x > n || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

// a after b: v -> a(b(v)).
VertexPermutation compose(const VertexPermutation& a, const VertexPermutation& b) {
    VertexPermutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i] - 1];
    return out;
}

VertexPermutation inverse(const VertexPermutation& a) {
    VertexPermutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[a[i] - 1] = static_cast<int>(i) + 1;
    return out;
}

struct AutSearch {
    int n = 0;
    std::vector<std::vector<int>> adj;       // [v-1] -> neighbors, 1-based
    std::vector<char> adj_mat;               // n*n adjacency lookups
    std::vector<int> hex_mult;               // per-vertex incident hexagon count
    std::vector<int> order;                  // BFS visit order, 1-based ids
    std::vector<int> parent;                 // [v-1] -> BFS parent or 0
    std::set<std::vector<int>> face_keys;    // sorted vertex lists
    std::vector<const Face*> faces;

    std::vector<int> img;                    // [v-1] -> image or 0
    std::vector<char> used;                  // image taken
    std::vector<VertexPermutation> found;

    bool adjacent(int a, int b) const { return adj_mat[(a - 1) * n + (b - 1)] != 0; }

    bool faces_preserved() const {
        for (const Face* f : faces) {
            std::vector<int> mapped;
            mapped.reserve(f->size());
            for (int v : *f) mapped.push_back(img[v - 1]);
            std::sort(mapped.begin(), mapped.end());
            if (!face_keys.count(mapped)) return false;
        }
        return true;
    }

    void dfs(std::size_t depth) {
        if (depth == order.size()) {
            if (faces_preserved()) found.emplace_back(img);
            return;
        }
        const int v = order[depth];
        const int p = parent[v - 1];
        if (p == 0) {
            for (int w = 1; w <= n; ++w) try_image(depth, v, w);
            return;
        }
        for (int w : adj[img[p - 1] - 1]) try_image(depth, v, w);
    }

    void try_image(std::size_t depth, int v, int w) {
        if (used[w] || hex_mult[w - 1] != hex_mult[v - 1]) return;
        for (int u : adj[v - 1]) {
            if (img[u - 1] != 0 && !adjacent(img[u - 1], w)) return;
        }
        img[v - 1] = w;
        used[w] = 1;
        dfs(depth + 1);
        img[v - 1] = 0;
        used[w] = 0;
    }
};

}  // namespace

AutomorphismGroup automorphisms(const FullereneGraph& g) {
    AutSearch s;
    s.n = g.vertex_count();
    s.adj.assign(s.n, {});
    s.adj_mat.assign(static_cast<std::size_t>(s.n) * s.n, 0);
    for (auto [a, b] : g.edges()) {
        s.adj[a - 1].push_back(b);
        s.adj[b - 1].push_back(a);
        s.adj_mat[(a - 1) * s.n + (b - 1)] = 1;
        s.adj_mat[(b - 1) * s.n + (a - 1)] = 1;
    }
    for (auto& nb : s.adj) std::sort(nb.begin(), nb.end());

    const IncidenceProfile prof = incidence_profile(g);
    s.hex_mult = prof.hex_multiplicity;

    for (const Face& f : g.faces()) {
        s.faces.push_back(&f);
        std::vector<int> key = f;
        std::sort(key.begin(), key.end());
        s.face_keys.insert(std::move(key));
    }

    // BFS order so every non-root vertex has an assigned parent: candidate
    // images are then neighbors of the parent's image, three at most.
    s.parent.assign(s.n, 0);
    std::vector<char> seen(s.n + 1, 0);
    s.order.push_back(1);
    seen[1] = 1;
    for (std::size_t head = 0; head < s.order.size(); ++head) {
        for (int u : s.adj[s.order[head] - 1]) {
            if (!seen[u]) {
                seen[u] = 1;
                s.parent[u - 1] = s.order[head];
                s.order.push_back(u);
            }
        }
    }
    if (s.order.size() != static_cast<std::size_t>(s.n))
        throw std::logic_error("graph not connected");

    s.img.assign(s.n, 0);
    s.used.assign(s.n + 1, 0);
    s.dfs(0);

    std::sort(s.found.begin(), s.found.end());
    AutomorphismGroup grp;
    grp.elements = std::move(s.found);

    // The face-preserving permutations must already form a group; anything
    // else means the search itself is broken.
    std::set<VertexPermutation> members(grp.elements.begin(), grp.elements.end());
    if (!members.count(identity_perm(s.n))) throw std::logic_error("identity missing");
    for (const auto& a : grp.elements) {
        if (!members.count(inverse(a))) throw std::logic_error("inverse missing");
        for (const auto& b : grp.elements) {
            if (!members.count(compose(a, b))) throw std::logic_error("not closed");
        }
    }
    return grp;
}

std::vector<VertexPermutation> generators(const AutomorphismGroup& grp) {
    if (grp.elements.empty()) return {};
    const int n = static_cast<int>(grp.elements.front().size());
    std::vector<VertexPermutation> gens;
    std::set<VertexPermutation> span;
    span.insert(identity_perm(n));
    for (const auto& e : grp.elements) {
        if (span.count(e)) continue;
        gens.push_back(e);
        // close under the enlarged set
        std::vector<VertexPermutation> frontier(span.begin(), span.end());
        while (!frontier.empty()) {
            std::vector<VertexPermutation> next;
            for (const auto& x : frontier) {
                for (const auto& gpe : gens) {
                    for (const auto& prod : {compose(x, gpe), compose(gpe, x)}) {
                        if (span.insert(prod).second) next.push_back(prod);
                    }
                }
            }
            frontier = std::move(next);
        }
        if (span.size() == grp.elements.size()) break;
    }
    return gens;
}

Configuration apply_automorphism(const Configuration& c, const VertexPermutation& sigma) {
    if (sigma.size() != c.size() || !is_permutation_1n(sigma))
        throw std::invalid_argument("sigma is not a permutation of 1..n");
    Configuration out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[sigma[i] - 1];
    return out;
}

Configuration complement(const Configuration& c) {
    const int n = static_cast<int>(c.size());
    Configuration out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = n + 1 - c[i];
    return out;
}

OrbitReport orbit_partition(const SolutionSet& s, const AutomorphismGroup& grp) {
    if (s.count > 0 && s.solutions.empty())
        throw std::invalid_argument("solution set was not stored");

    OrbitReport rep;
    rep.pair = s.pair;
    if (s.solutions.empty()) return rep;

    const int n = static_cast<int>(s.solutions.front().size());
    const std::vector<VertexPermutation>* elems = &grp.elements;
    std::vector<VertexPermutation> trivial;
    if (elems->empty()) {
        trivial.push_back(identity_perm(n));
        elems = &trivial;
    }

    std::set<Configuration> visited;
    for (const Configuration& c : s.solutions) {
        if (visited.count(c)) continue;
        std::set<Configuration> orbit;
        for (const auto& sigma : *elems) orbit.insert(apply_automorphism(c, sigma));
        const std::uint64_t size = orbit.size();
        if (rep.orbit_size == 0) {
            rep.orbit_size = size;
        } else if (rep.orbit_size != size) {
            throw std::logic_error("orbit sizes not uniform");
        }
        rep.representatives.push_back(*orbit.begin());
        ++rep.orbit_count;
        visited.insert(orbit.begin(), orbit.end());
    }
    std::sort(rep.representatives.begin(), rep.representatives.end());
    return rep;
}

bool check_free_action(const SolutionSet& s, const AutomorphismGroup& grp) {
    if (s.solutions.empty()) return true;
    const int n = static_cast<int>(s.solutions.front().size());
    const VertexPermutation id = identity_perm(n);
    for (const Configuration& c : s.solutions) {
        for (const auto& sigma : grp.elements) {
            if (sigma == id) continue;
            if (apply_automorphism(c, sigma) == c) return false;
        }
    }
    return true;
}

}  // namespace fmc
