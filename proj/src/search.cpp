#include "fmc/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <climits>
#include <mutex>
#include <thread>

namespace fmc {

namespace {

constexpr int kMaxVerts = 64;  // label bitset width; documented limit
constexpr int kMaxFaces = kMaxVerts / 2 + 2;

inline std::uint64_t bit(int i) {
    return 1ULL << i;
}

// Bits lo-1 .. hi-1 set (labels lo..hi), assuming 1 <= lo <= hi <= 64.
inline std::uint64_t label_range(int lo, int hi) {
    const std::uint64_t upper = (hi >= 64) ? ~0ULL : (bit(hi) - 1);
    return upper & ~(bit(lo - 1) - 1);
}

inline int lowest_label(std::uint64_t dom) {
    return std::countr_zero(dom) + 1;
}

inline int highest_label(std::uint64_t dom) {
    return 64 - std::countl_zero(dom);
}

inline std::uint64_t bitrev64(std::uint64_t x) {
    x = ((x & 0x5555555555555555ULL) << 1) | ((x >> 1) & 0x5555555555555555ULL);
    x = ((x & 0x3333333333333333ULL) << 2) | ((x >> 2) & 0x3333333333333333ULL);
    x = ((x & 0x0f0f0f0f0f0f0f0fULL) << 4) | ((x >> 4) & 0x0f0f0f0f0f0f0f0fULL);
    return __builtin_bswap64(x);
}

constexpr int kMaxGroups = 32;

struct Plan {
    int n = 0;
    int nfaces = 0;
    std::uint64_t full_mask = 0;
    std::array<int, kMaxFaces> face_size{};
    std::array<long long, kMaxFaces> face_const{};
    std::array<std::array<int, 6>, kMaxFaces> face_verts{};  // 0-based vertices
    std::array<std::array<int, 3>, kMaxVerts> vert_faces{};
    // Families of pairwise vertex-disjoint faces. The labels inside one
    // family are distinct and must sum to the family's combined constant,
    // which bounds whole regions long before single faces get tight.
    int ngroups = 0;
    std::array<int, kMaxGroups> group_slots0{};
    std::array<long long, kMaxGroups> group_need0{};
    std::array<std::uint64_t, kMaxGroups> group_verts{};
    std::array<std::array<std::int8_t, kMaxGroups>, kMaxFaces> face_groups{};
    std::array<std::int8_t, kMaxFaces> face_group_count{};
};

// Largest total-vertex-count subsets of pairwise disjoint faces within
// `allowed`, all of them on ties, by plain exhaustive branching
// (face counts here are tiny).
void best_disjoint(const std::array<std::uint64_t, kMaxFaces>& conflict,
                   const std::array<int, kMaxFaces>& face_size, std::uint64_t allowed,
                   std::uint64_t chosen, int weight, std::vector<std::uint64_t>& best_masks,
                   int& best_weight) {
    if (allowed == 0) {
        if (weight > best_weight) {
            best_weight = weight;
            best_masks.clear();
        }
        if (weight == best_weight && best_masks.size() < 4096) {
            best_masks.push_back(chosen);  // bounded: ties can explode on big inputs
        }
        return;
    }
    const int f = std::countr_zero(allowed);
    best_disjoint(conflict, face_size, allowed & ~(conflict[f] | bit(f)), chosen | bit(f),
                  weight + face_size[f], best_masks, best_weight);
    best_disjoint(conflict, face_size, allowed & ~bit(f), chosen, weight, best_masks, best_weight);
}

Plan build_plan(const FullereneGraph& g, MagicPair p) {
    Plan P;
    P.n = g.vertex_count();
    P.nfaces = static_cast<int>(g.faces().size());
    P.full_mask = (P.n == 64) ? ~0ULL : (bit(P.n) - 1);
    std::array<int, kMaxVerts> seen{};
    std::array<std::uint64_t, kMaxFaces> fverts{};  // vertex sets per face
    for (int f = 0; f < P.nfaces; ++f) {
        const Face& face = g.faces()[static_cast<std::size_t>(f)];
        P.face_size[f] = static_cast<int>(face.size());
        P.face_const[f] = FullereneGraph::is_pentagon(face) ? p.sp : p.sh;
        for (std::size_t i = 0; i < face.size(); ++i) {
            const int v = face[i] - 1;
            P.face_verts[f][i] = v;
            P.vert_faces[v][seen[v]++] = f;
            fverts[f] |= bit(v);
        }
    }

    std::array<std::uint64_t, kMaxFaces> conflict{};
    std::uint64_t hexes = 0;
    std::uint64_t pents = 0;
    for (int f = 0; f < P.nfaces; ++f) {
        (P.face_size[f] == 5 ? pents : hexes) |= bit(f);
        for (int e = 0; e < P.nfaces; ++e) {
            if (e != f && (fverts[f] & fverts[e]) != 0) {
                conflict[f] |= bit(e);
            }
        }
    }
    // Maximum disjoint sets per kind bucket: hexagons only, pentagons only,
    // both together. ALL maxima are kept, not one tie-broken winner: each
    // family only intersects windows, so extra families never weaken the
    // pruning, and the result no longer depends on face input order.
    std::vector<std::uint64_t> cands;
    for (const std::uint64_t within : {hexes, pents, hexes | pents}) {
        std::vector<std::uint64_t> masks;
        int weight = -1;
        best_disjoint(conflict, P.face_size, within, 0, 0, masks, weight);
        for (const std::uint64_t m : masks) {
            if (std::popcount(m) >= 2) {
                cands.push_back(m);  // a single face adds nothing over its own bound
            }
        }
    }
    struct Family {
        std::uint64_t verts;
        long long need;
        int slots;
        std::uint64_t faces;
        bool same_constraint(const Family& o) const {
            return verts == o.verts && need == o.need && slots == o.slots;
        }
    };
    std::vector<Family> fams;
    fams.reserve(cands.size());
    for (const std::uint64_t m : cands) {
        Family fam{0, 0, 0, m};
        for (std::uint64_t x = m; x != 0; x &= x - 1) {
            const int f = std::countr_zero(x);
            fam.verts |= fverts[f];
            fam.need += P.face_const[f];
            fam.slots += P.face_size[f];
        }
        fams.push_back(fam);
    }
    std::sort(fams.begin(), fams.end(), [](const Family& a, const Family& b) {
        if (a.verts != b.verts) {
            return a.verts < b.verts;
        }
        if (a.need != b.need) {
            return a.need < b.need;
        }
        return a.slots < b.slots;
    });
    fams.erase(std::unique(fams.begin(), fams.end(),
                           [](const Family& a, const Family& b) { return a.same_constraint(b); }),
               fams.end());
    for (const Family& fam : fams) {
        if (P.ngroups == kMaxGroups) {
            break;
        }
        const int id = P.ngroups++;
        P.group_slots0[id] = fam.slots;
        P.group_need0[id] = fam.need;
        P.group_verts[id] = fam.verts;
        for (std::uint64_t x = fam.faces; x != 0; x &= x - 1) {
            const int f = std::countr_zero(x);
            P.face_groups[f][P.face_group_count[f]++] = static_cast<std::int8_t>(id);
        }
    }
    return P;
}

struct State {
    std::uint64_t used = 0;
    std::uint64_t free_verts = 0;  // bit v: vertex v unassigned
    std::uint64_t open_faces = 0;  // bit f: face f has open slots
    int assigned = 0;
    long long unused_sum = 0;
    std::array<int, kMaxVerts> labels{};  // 0 = unassigned
    std::array<int, kMaxFaces> remaining{};
    std::array<long long, kMaxFaces> partial{};
    std::array<int, kMaxGroups> g_slots{};
    std::array<long long, kMaxGroups> g_need{};
    // Placement log so one decision plus its consequences unwind together.
    std::array<int, kMaxVerts> trail{};
    int trail_top = 0;
    // Scratch refreshed by compute_reach: sum of the k smallest / largest
    // unused labels, k up to the deepest live constraint.
    std::array<long long, kMaxVerts + 1> mins{};
    std::array<long long, kMaxVerts + 1> maxs{};
    // Per-vertex feasible labels, refreshed by propagate() on the way down.
    std::array<std::uint64_t, kMaxVerts> domains{};

    void reset(const Plan& P) {
        used = 0;
        free_verts = P.full_mask;
        open_faces = bit(P.nfaces) - 1;
        assigned = 0;
        unused_sum = static_cast<long long>(P.n) * (P.n + 1) / 2;
        labels.fill(0);
        partial.fill(0);
        trail_top = 0;
        for (int f = 0; f < P.nfaces; ++f) {
            remaining[f] = P.face_size[f];
        }
        for (int gid = 0; gid < P.ngroups; ++gid) {
            g_slots[gid] = P.group_slots0[gid];
            g_need[gid] = P.group_need0[gid];
        }
    }
};

// Bookkeeping for one label placement plus the exact check for any face it
// closes. Caller must unwind via undo_to() even when this fails.
inline bool place(const Plan& P, State& st, int v, int lbl) {
    st.labels[v] = lbl;
    st.used |= bit(lbl - 1);
    st.free_verts &= ~bit(v);
    ++st.assigned;
    st.unused_sum -= lbl;
    st.trail[st.trail_top++] = v;
    for (int f : P.vert_faces[v]) {
        st.partial[f] += lbl;
        if (--st.remaining[f] == 0) {
            st.open_faces &= ~bit(f);
        }
        for (int gi = 0; gi < P.face_group_count[f]; ++gi) {
            const int gid = P.face_groups[f][gi];
            --st.g_slots[gid];
            st.g_need[gid] -= lbl;
        }
    }
    for (int f : P.vert_faces[v]) {
        if (st.remaining[f] == 0 && st.partial[f] != P.face_const[f]) {
            return false;
        }
    }
    return true;
}

inline void undo_to(const Plan& P, State& st, int mark) {
    while (st.trail_top > mark) {
        const int v = st.trail[--st.trail_top];
        const int lbl = st.labels[v];
        st.labels[v] = 0;
        st.used &= ~bit(lbl - 1);
        st.free_verts |= bit(v);
        --st.assigned;
        st.unused_sum += lbl;
        for (int f : P.vert_faces[v]) {
            st.partial[f] -= lbl;
            if (st.remaining[f]++ == 0) {
                st.open_faces |= bit(f);
            }
            for (int gi = 0; gi < P.face_group_count[f]; ++gi) {
                const int gid = P.face_groups[f][gi];
                ++st.g_slots[gid];
                st.g_need[gid] += lbl;
            }
        }
    }
}

inline void compute_reach(const Plan& P, State& st, int depth) {
    const std::uint64_t unused = ~st.used & P.full_mask;
    const int avail = std::popcount(unused);
    const int top = avail < depth ? avail : depth;
    std::uint64_t lo = unused;
    std::uint64_t hi = unused;
    st.mins[0] = st.maxs[0] = 0;
    for (int k = 1; k <= top; ++k) {
        st.mins[k] = st.mins[k - 1] + std::countr_zero(lo) + 1;
        lo &= lo - 1;
        const int b = 63 - std::countl_zero(hi);
        st.maxs[k] = st.maxs[k - 1] + b + 1;
        hi &= ~bit(b);
    }
}

// Largest prefix-sum depth any live constraint can ask for. Face slot counts
// stay at 6 or below; group constraints are evaluated from whichever side of
// the free-vertex split is smaller (sums over one side convert to the other
// through the total unused sum), reading one entry past that slot count.
inline int reach_depth(const Plan& P, const State& st) {
    int depth = 6;
    const int free_total = P.n - st.assigned;
    for (int gid = 0; gid < P.ngroups; ++gid) {
        const int k = st.g_slots[gid];
        const int side = k < free_total - k ? k : free_total - k;
        if (side + 1 > depth) {
            depth = side + 1;
        }
    }
    return depth;
}

// Every open face must still reach its constant with distinct unused labels;
// a face down to its last open slot must find its exact missing label unused,
// and one with two open slots an unused pair with the exact sum (the partner
// mask is the unused set mirrored about the needed total). An open face
// always has remaining <= popcount(unused), so the prefix sums from
// compute_reach cover it. Face checks only; the verification enumerator uses
// exactly this and nothing stronger.
inline bool reach_ok(const Plan& P, State& st) {
    compute_reach(P, st, 6);
    const std::uint64_t unused = ~st.used & P.full_mask;
    for (std::uint64_t of = st.open_faces; of != 0; of &= of - 1) {
        const int f = std::countr_zero(of);
        const long long need = P.face_const[f] - st.partial[f];
        const int r = st.remaining[f];
        if (need < st.mins[r] || need > st.maxs[r]) {
            return false;
        }
        if (r == 1 && (unused & bit(static_cast<int>(need) - 1)) == 0) {
            return false;
        }
        if (r == 2) {
            // Between the interval bounds 3 <= need <= 2n-1 < 65, so the
            // mirror is always a plain right shift.
            std::uint64_t m = unused & (bitrev64(unused) >> (65 - static_cast<int>(need)));
            if ((need & 1) == 0) {
                m &= ~bit(static_cast<int>(need) / 2 - 1);  // a label cannot pair with itself
            }
            if (m == 0) {
                return false;
            }
        }
    }
    return true;
}

// Single constraint pass after a successful placement:
//   1. every disjoint-face family must keep its residual sum reachable, and
//      projects label windows onto its member and non-member free vertices;
//   2. every open face's needed sum must stay within reach of the unused
//      labels, and confines its open slots to the label window
//      [need - maxs[r-1], need - mins[r-1]];
//   3. a vertex's domain is the window intersection of its three faces and
//      the family windows (empty: dead branch);
//   4. every unused label must fit some free vertex.
// All windows over-approximate, so no feasible completion is ever cut.
// Leaves st.domains valid for the free vertices.
bool propagate(const Plan& P, State& st) {
    if (st.assigned == P.n) {
        return true;
    }
    compute_reach(P, st, reach_depth(P, st));
    const std::uint64_t unused = ~st.used & P.full_mask;

    // Each disjoint-face family needs its open slots to sum to g_need with
    // distinct unused labels. That bounds the family and, projected to
    // single slots, gives member vertices the window
    // [need - maxs[k-1], need - mins[k-1]]. The free vertices outside the
    // family must take what is left, which by the same argument confines
    // them to [mins[k+1] - need, maxs[k+1] - need].
    std::array<std::uint64_t, kMaxGroups> gwin;
    std::array<std::uint64_t, kMaxGroups> cwin;
    const int free_total = P.n - st.assigned;
    for (int gid = 0; gid < P.ngroups; ++gid) {
        gwin[gid] = cwin[gid] = ~0ULL;
        int k = st.g_slots[gid];
        if (k == 0) {
            continue;
        }
        long long need = st.g_need[gid];
        // Evaluate from the smaller side of the member / non-member split:
        // the complement slots must sum to unused_sum - need.
        const bool flip = k > free_total - k;
        if (flip) {
            k = free_total - k;
            need = st.unused_sum - need;
        }
        if (need < st.mins[k] || need > st.maxs[k]) {
            return false;
        }
        std::uint64_t near_win = ~0ULL;  // window of the evaluated side
        if (k >= 1) {
            long long lo = need - st.maxs[k - 1];
            long long hi = need - st.mins[k - 1];
            if (lo < 1) {
                lo = 1;
            }
            if (hi > P.n) {
                hi = P.n;
            }
            if (lo > hi) {
                return false;
            }
            near_win = label_range(static_cast<int>(lo), static_cast<int>(hi));
        }
        std::uint64_t far_win = ~0ULL;  // window of the other side
        if (k < free_total) {
            long long lo = st.mins[k + 1] - need;
            long long hi = st.maxs[k + 1] - need;
            if (lo < 1) {
                lo = 1;
            }
            if (hi > P.n) {
                hi = P.n;
            }
            if (lo > hi) {
                return false;
            }
            far_win = label_range(static_cast<int>(lo), static_cast<int>(hi));
        }
        gwin[gid] = flip ? far_win : near_win;
        cwin[gid] = flip ? near_win : far_win;
    }

    std::array<std::uint64_t, kMaxFaces> fmask;
    for (std::uint64_t of = st.open_faces; of != 0; of &= of - 1) {
        const int f = std::countr_zero(of);
        const long long need = P.face_const[f] - st.partial[f];
        const int r = st.remaining[f];
        if (need < st.mins[r] || need > st.maxs[r]) {
            return false;
        }
        long long lo = need - st.maxs[r - 1];
        long long hi = need - st.mins[r - 1];
        if (lo < 1) {
            lo = 1;
        }
        if (hi > P.n) {
            hi = P.n;
        }
        if (lo > hi) {
            return false;
        }
        fmask[f] = label_range(static_cast<int>(lo), static_cast<int>(hi)) & unused;
    }
    std::uint64_t cover = 0;
    for (std::uint64_t fv = st.free_verts; fv != 0; fv &= fv - 1) {
        const int v = std::countr_zero(fv);
        const auto& vf = P.vert_faces[v];
        std::uint64_t dom = fmask[vf[0]] & fmask[vf[1]] & fmask[vf[2]];
        for (int gid = 0; gid < P.ngroups; ++gid) {
            dom &= (P.group_verts[gid] >> v & 1ULL) != 0 ? gwin[gid] : cwin[gid];
        }
        if (dom == 0) {
            return false;
        }
        st.domains[v] = dom;
        cover |= dom;
    }
    return (unused & ~cover) == 0;
}

// One decision: place the label, then propagate its consequences. On any
// failure the caller unwinds to its own trail mark.
inline bool advance(const Plan& P, State& st, int v, int lbl) {
    return place(P, st, v, lbl) && propagate(P, st);
}

// Feasibility and domain setup for the empty assignment.
inline bool init_root(const Plan& P, State& st) {
    st.reset(P);
    return propagate(P, st);
}

// Most-constrained-face heuristic: the unassigned vertex of lowest id among
// the faces with the fewest open slots. A face one slot short of closing is
// always preferred, and propagation has already reduced such a slot to a
// single-label domain when it survives at all.
inline int pick_vertex(const Plan& P, const State& st) {
    int min_rem = INT_MAX;
    for (std::uint64_t of = st.open_faces; of != 0; of &= of - 1) {
        const int r = st.remaining[std::countr_zero(of)];
        if (r < min_rem) {
            min_rem = r;
        }
    }
    int best = kMaxVerts;
    for (std::uint64_t of = st.open_faces; of != 0; of &= of - 1) {
        const int f = std::countr_zero(of);
        if (st.remaining[f] != min_rem) {
            continue;
        }
        for (int i = 0; i < P.face_size[f]; ++i) {
            const int v = P.face_verts[f][i];
            if (st.labels[v] == 0 && v < best) {
                best = v;
            }
        }
    }
    return best;
}

// Shared progress accounting across workers. Nodes are decision attempts:
// labels tried at a picked vertex (forced placements ride along free).
struct Budget {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    std::uint64_t limit = 0;

    explicit Budget(std::uint64_t lim) : limit(lim) {}

    void flush(std::uint64_t& local) {
        if (local == 0) {
            return;
        }
        const std::uint64_t total = nodes.fetch_add(local, std::memory_order_relaxed) + local;
        local = 0;
        if (total > limit) {
            abort.store(true, std::memory_order_relaxed);
        }
    }
};

constexpr std::uint64_t kFlushEvery = 8192;

struct WorkerResult {
    std::uint64_t count = 0;
    std::vector<Configuration> solutions;
};

// Depth-first search continuing from the current state, whose domains must
// be valid (advance or init_root just succeeded). Returns false when the
// global abort flag fired (budget exhausted).
bool dfs(const Plan& P, State& st, Budget& budget, std::uint64_t& local_nodes, bool keep,
         WorkerResult& out) {
    if (budget.abort.load(std::memory_order_relaxed)) {
        return false;
    }
    if (st.assigned == P.n) {
        ++out.count;
        if (keep) {
            out.solutions.emplace_back(st.labels.begin(), st.labels.begin() + P.n);
        }
        return true;
    }
    const int v = pick_vertex(P, st);
    std::uint64_t candidates = st.domains[v];  // copy: descendants overwrite domains
    while (candidates != 0) {
        const int lbl = std::countr_zero(candidates) + 1;
        candidates &= candidates - 1;
        if (++local_nodes >= kFlushEvery) {
            budget.flush(local_nodes);
        }
        const int mark = st.trail_top;
        bool ok = true;
        if (advance(P, st, v, lbl)) {
            ok = dfs(P, st, budget, local_nodes, keep, out);
        }
        undo_to(P, st, mark);
        if (!ok || budget.abort.load(std::memory_order_relaxed)) {
            return false;
        }
    }
    return true;
}

using Prefix = std::vector<std::pair<int, int>>;  // (vertex, label) in decision order

// Expands the root into independent subtree tasks by fixing the labels of
// the first decision vertices, following the same decision rule as the
// search itself, until at least `target` tasks exist (or the tree stops
// growing). Tasks cover the solution set disjointly, so per-task results
// can be summed.
std::vector<Prefix> expand_frontier(const Plan& P, int target, std::uint64_t& nodes) {
    std::vector<Prefix> frontier = {{}};
    constexpr int kMaxDepth = 10;
    State st;
    for (int depth = 0; depth < kMaxDepth && static_cast<int>(frontier.size()) < target; ++depth) {
        std::vector<Prefix> next;
        for (const Prefix& task : frontier) {
            if (!init_root(P, st)) {
                return {};
            }
            bool alive = true;
            for (const auto& [v, lbl] : task) {
                if (!advance(P, st, v, lbl)) {
                    alive = false;
                    break;
                }
            }
            if (!alive) {
                continue;  // cannot happen: prefixes were consistent when created
            }
            if (st.assigned == P.n) {
                next.push_back(task);  // subtree is a single forced solution
                continue;
            }
            const int v = pick_vertex(P, st);
            std::uint64_t candidates = st.domains[v];
            while (candidates != 0) {
                const int lbl = std::countr_zero(candidates) + 1;
                candidates &= candidates - 1;
                ++nodes;
                const int mark = st.trail_top;
                if (advance(P, st, v, lbl)) {
                    Prefix child = task;
                    child.emplace_back(v, lbl);
                    next.push_back(std::move(child));
                }
                undo_to(P, st, mark);
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) {
            break;
        }
    }
    return frontier;
}

std::string infeasible_message(const Relation& rel, MagicPair p, int n) {
    return "(" + std::to_string(p.sp) + "," + std::to_string(p.sh) + ") violates " +
           std::to_string(rel.pentagon_coeff) + "*S_p + " + std::to_string(rel.hexagon_coeff) +
           "*S_h = " + std::to_string(rel.rhs) + " for n = " + std::to_string(n);
}

}  // namespace

bool verify_configuration(const FullereneGraph& g, const Configuration& c, MagicPair p) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.size()) != n) {
        throw std::invalid_argument("configuration has " + std::to_string(c.size()) +
                                    " labels, expected " + std::to_string(n));
    }
    std::uint64_t seen = 0;
    for (int lbl : c) {
        if (lbl < 1 || lbl > n || (seen >> (lbl - 1) & 1ULL)) {
            return false;
        }
        seen |= bit(lbl - 1);
    }
    for (const Face& f : g.faces()) {
        long long s = 0;
        for (int v : f) {
            s += c[static_cast<std::size_t>(v - 1)];
        }
        if (s != (FullereneGraph::is_pentagon(f) ? p.sp : p.sh)) {
            return false;
        }
    }
    return true;
}

SolutionSet enumerate_configurations(const FullereneGraph& g, MagicPair p,
                                     const EnumerateOptions& opt, const SolutionSink& sink) {
    if (g.vertex_count() > kMaxVerts) {
        throw std::invalid_argument("enumeration supports at most 64 vertices");
    }
    const Relation rel = magic_relation(g.vertex_count());
    if (!rel.holds(p)) {
        throw InfeasiblePairError(infeasible_message(rel, p, g.vertex_count()));
    }

    const Plan P = build_plan(g, p);
    SolutionSet result;
    result.graph_id = g.id();
    result.pair = p;

    int workers = opt.workers > 0
                      ? opt.workers
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    Budget budget(opt.node_budget);
    const bool keep = opt.store_solutions || opt.mode == EnumMode::kStream;
    const bool emit_live = opt.mode == EnumMode::kStream && !opt.sorted && sink;

    std::uint64_t frontier_nodes = 0;
    std::vector<Prefix> tasks;
    if (workers == 1) {
        tasks = {{}};
    } else {
        tasks = expand_frontier(P, 4 * workers, frontier_nodes);
        workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers),
                                                         std::max<std::size_t>(tasks.size(), 1)));
    }
    budget.nodes.fetch_add(frontier_nodes, std::memory_order_relaxed);

    std::vector<WorkerResult> results(static_cast<std::size_t>(workers));
    std::atomic<std::size_t> next_task{0};
    std::mutex sink_mutex;

    auto work = [&](int wid) {
        WorkerResult& res = results[static_cast<std::size_t>(wid)];
        State st;
        std::uint64_t local_nodes = 0;
        for (;;) {
            const std::size_t ti = next_task.fetch_add(1, std::memory_order_relaxed);
            if (ti >= tasks.size() || budget.abort.load(std::memory_order_relaxed)) {
                break;
            }
            if (!init_root(P, st)) {
                break;  // no assignment is feasible at all
            }
            bool alive = true;
            for (const auto& [v, lbl] : tasks[ti]) {
                if (!advance(P, st, v, lbl)) {
                    alive = false;
                    break;
                }
            }
            if (!alive) {
                continue;
            }
            if (emit_live) {
                WorkerResult chunk;
                dfs(P, st, budget, local_nodes, true, chunk);
                res.count += chunk.count;
                std::lock_guard<std::mutex> lock(sink_mutex);
                for (const Configuration& c : chunk.solutions) {
                    sink(c);
                }
            } else {
                dfs(P, st, budget, local_nodes, keep, res);
            }
        }
        budget.flush(local_nodes);
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    result.partial = budget.abort.load();
    result.nodes = budget.nodes.load();
    for (WorkerResult& res : results) {
        result.count += res.count;
        if (keep && !emit_live) {
            result.solutions.insert(result.solutions.end(),
                                    std::make_move_iterator(res.solutions.begin()),
                                    std::make_move_iterator(res.solutions.end()));
        }
    }
    if (opt.sorted) {
        std::sort(result.solutions.begin(), result.solutions.end());
    }
    if (opt.mode == EnumMode::kStream && opt.sorted && sink) {
        for (const Configuration& c : result.solutions) {
            sink(c);
        }
    }
    if (!opt.store_solutions) {
        result.solutions.clear();
        result.solutions.shrink_to_fit();
    }
    return result;
}

OracleResult oracle_enumerate(const FullereneGraph& g, MagicPair p, std::uint64_t node_budget) {
    if (g.vertex_count() > kMaxVerts) {
        throw std::invalid_argument("enumeration supports at most 64 vertices");
    }
    const Relation rel = magic_relation(g.vertex_count());
    if (!rel.holds(p)) {
        throw InfeasiblePairError(infeasible_message(rel, p, g.vertex_count()));
    }

    const Plan P = build_plan(g, p);

    // Static decision order: faces in reverse input order, vertices in stored
    // boundary order, first occurrence wins. No dynamic reordering, no forced
    // labels, no propagation: every open vertex tries every unused label,
    // with only the face-sum reach checks to cut dead branches.
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(P.n));
    std::array<bool, kMaxVerts> seen{};
    for (int f = P.nfaces - 1; f >= 0; --f) {
        for (int i = 0; i < P.face_size[f]; ++i) {
            const int v = P.face_verts[f][i];
            if (!seen[v]) {
                seen[v] = true;
                order.push_back(v);
            }
        }
    }

    OracleResult out;
    State st;
    st.reset(P);
    std::uint64_t nodes = 0;
    bool aborted = false;

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (aborted) {
            return;
        }
        if (depth == order.size()) {
            ++out.count;
            return;
        }
        const int v = order[depth];
        std::uint64_t candidates = ~st.used & P.full_mask;
        while (candidates != 0) {
            const int lbl = std::countr_zero(candidates) + 1;
            candidates &= candidates - 1;
            if (++nodes > node_budget) {
                aborted = true;
                return;
            }
            const int mark = st.trail_top;
            if (place(P, st, v, lbl) && reach_ok(P, st)) {
                self(self, depth + 1);
            }
            undo_to(P, st, mark);
            if (aborted) {
                return;
            }
        }
    };
    rec(rec, 0);

    out.partial = aborted;
    out.nodes = nodes;
    return out;
}

CountTable count_all(const FullereneGraph& g, const EnumerateOptions& opt) {
    CountTable table;
    table.graph_id = g.id();
    table.n = g.vertex_count();
    const FeasibilityReport rep = feasible_pairs(g);
    table.note = rep.note;
    EnumerateOptions run = opt;
    run.mode = EnumMode::kCountOnly;
    run.store_solutions = false;
    for (const MagicPair& p : rep.pairs) {
        const SolutionSet s = enumerate_configurations(g, p, run);
        table.rows.push_back({p, s.count, s.partial, s.nodes});
    }
    return table;
}

}  // namespace fmc
