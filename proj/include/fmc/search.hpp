#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fmc/constants.hpp"
#include "fmc/graph.hpp"

namespace fmc {

// A requested pair violates the magic-sum relation for the graph's n.
class InfeasiblePairError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A vertex labeling: labels[i] holds f(v_{i+1}), values 1..n.
using Configuration = std::vector<int>;

enum class EnumMode { kCountOnly, kStream };

struct EnumerateOptions {
    EnumMode mode = EnumMode::kCountOnly;
    int workers = 0;                                // 0 = hardware concurrency
    std::uint64_t node_budget = 10'000'000'000ULL;  // label assignment attempts per pair
    bool sorted = false;        // emit/store in lexicographic label order
    bool store_solutions = false;
};

struct SolutionSet {
    std::string graph_id;
    MagicPair pair{};
    std::uint64_t count = 0;
    bool partial = false;   // node budget hit; count is a lower bound
    std::uint64_t nodes = 0;
    std::vector<Configuration> solutions;  // filled when store_solutions
};

using SolutionSink = std::function<void(const Configuration&)>;

// True iff c is a permutation of 1..n and every face sums to its constant.
// Throws std::invalid_argument when c's length differs from n.
bool verify_configuration(const FullereneGraph& g, const Configuration& c, MagicPair p);

// Exhaustive backtracking enumeration of all magical configurations with the
// given constants. No symmetry reduction: raw counts. Deterministic count for
// any worker count. In stream mode every solution reaches the sink exactly
// once (unsorted: as found, concurrently; sorted: lexicographic, after the
// search completes). Throws InfeasiblePairError when p violates the relation.
// Requires n <= 64 (label bitset width).
SolutionSet enumerate_configurations(const FullereneGraph& g, MagicPair p,
                                     const EnumerateOptions& opt = {},
                                     const SolutionSink& sink = nullptr);

// Independent verification enumerator: faces processed in reverse input
// order, vertices in a static order, no forced-label shortcut, single
// threaded. Same counts as enumerate_configurations by a different route.
struct OracleResult {
    std::uint64_t count = 0;
    bool partial = false;
    std::uint64_t nodes = 0;
};
OracleResult oracle_enumerate(const FullereneGraph& g, MagicPair p,
                              std::uint64_t node_budget = 10'000'000'000ULL);

struct CountRow {
    MagicPair pair{};
    std::uint64_t count = 0;
    bool partial = false;
    std::uint64_t nodes = 0;
};

// Counts for every pair from feasible_pairs(g), ascending S_h.
struct CountTable {
    std::string graph_id;
    int n = 0;
    std::vector<CountRow> rows;
    std::string note;  // reason when rows is empty
};
CountTable count_all(const FullereneGraph& g, const EnumerateOptions& opt = {});

}  // namespace fmc
