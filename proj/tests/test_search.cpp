#include <algorithm>
#include <mutex>
#include <set>
#include <vector>

#include "doctest.h"
#include "fmc/constants.hpp"
#include "fmc/graph.hpp"
#include "fmc/search.hpp"

using namespace fmc;

namespace {

// The lightest nonempty class; shared so the expensive search runs once.
const SolutionSet& c24_57_108() {
    static const SolutionSet s = [] {
        EnumerateOptions opt;
        opt.workers = 4;
        opt.sorted = true;
        opt.store_solutions = true;
        return enumerate_configurations(builtin("C24"), {57, 108}, opt);
    }();
    return s;
}

}  // namespace

TEST_CASE("C24 (57,108) full class") {
    const SolutionSet& s = c24_57_108();
    CHECK(s.graph_id == "C24");
    CHECK(s.pair == MagicPair{57, 108});
    CHECK(s.count == 576);
    CHECK_FALSE(s.partial);
    CHECK(s.nodes > 0);
    REQUIRE(s.solutions.size() == 576);

    const FullereneGraph g = builtin("C24");
    std::set<Configuration> distinct;
    for (const Configuration& c : s.solutions) {
        CHECK(verify_configuration(g, c, {57, 108}));
        distinct.insert(c);
    }
    CHECK(distinct.size() == 576);
    CHECK(std::is_sorted(s.solutions.begin(), s.solutions.end()));
}

TEST_CASE("worker count changes nothing") {
    EnumerateOptions opt;
    opt.workers = 1;
    const SolutionSet s1 = enumerate_configurations(builtin("C24"), {57, 108}, opt);
    CHECK(s1.count == 576);
    CHECK_FALSE(s1.partial);
    CHECK(s1.count == c24_57_108().count);
}

TEST_CASE("stream mode delivers every solution exactly once") {
    EnumerateOptions opt;
    opt.mode = EnumMode::kStream;
    opt.workers = 4;
    std::mutex mu;
    std::vector<Configuration> got;
    const SolutionSet s = enumerate_configurations(
        builtin("C24"), {57, 108}, opt, [&](const Configuration& c) {
            std::lock_guard<std::mutex> lock(mu);
            got.push_back(c);
        });
    CHECK(s.count == 576);
    CHECK(got.size() == 576);
    std::sort(got.begin(), got.end());
    CHECK(got == c24_57_108().solutions);
}

TEST_CASE("sorted stream emits in lexicographic order") {
    EnumerateOptions opt;
    opt.mode = EnumMode::kStream;
    opt.sorted = true;
    std::vector<Configuration> got;
    enumerate_configurations(builtin("C24"), {57, 108}, opt,
                             [&](const Configuration& c) { got.push_back(c); });
    CHECK(got == c24_57_108().solutions);
}

TEST_CASE("node budget flags a partial count") {
    EnumerateOptions opt;
    opt.node_budget = 100000;
    const SolutionSet s = enumerate_configurations(builtin("C24"), {57, 108}, opt);
    CHECK(s.partial);
    CHECK(s.count <= 576);
    CHECK(s.nodes >= 100000);
}

TEST_CASE("infeasible pairs are rejected up front") {
    CHECK_THROWS_AS(enumerate_configurations(builtin("C24"), {57, 107}, {}),
                    InfeasiblePairError);
    CHECK_THROWS_AS(enumerate_configurations(builtin("C24"), {58, 108}, {}),
                    InfeasiblePairError);
    CHECK_THROWS_AS(enumerate_configurations(builtin("C20"), {52, 0}, {}),
                    InfeasiblePairError);
    CHECK_THROWS_AS(oracle_enumerate(builtin("C24"), {57, 107}), InfeasiblePairError);
}

TEST_CASE("empty class comes back exact") {
    const SolutionSet s = enumerate_configurations(builtin("C26"), {73, 59}, {});
    CHECK(s.count == 0);
    CHECK_FALSE(s.partial);
}

TEST_CASE("verify_configuration") {
    const FullereneGraph g = builtin("C24");
    const Configuration good = c24_57_108().solutions.front();
    CHECK(verify_configuration(g, good, {57, 108}));

    // Wrong constants.
    CHECK_FALSE(verify_configuration(g, good, {68, 42}));

    // Any transposition breaks at least one face sum.
    Configuration swapped = good;
    std::swap(swapped[0], swapped[5]);
    CHECK_FALSE(verify_configuration(g, swapped, {57, 108}));

    // Not a permutation.
    Configuration dup = good;
    dup[3] = dup[7];
    CHECK_FALSE(verify_configuration(g, dup, {57, 108}));

    Configuration out_of_range = good;
    out_of_range[0] = 25;
    CHECK_FALSE(verify_configuration(g, out_of_range, {57, 108}));

    CHECK_THROWS_AS(verify_configuration(g, Configuration{1, 2, 3}, {57, 108}),
                    std::invalid_argument);
}

TEST_CASE("verification enumerator respects its budget") {
    // Full-tree agreement with the primary engine is the gate binary's job;
    // here only the budget and flag mechanics. An interrupted run never
    // overcounts, so the partial tally stays below the known class size.
    const OracleResult r = oracle_enumerate(builtin("C24"), {57, 108}, 2000000);
    CHECK(r.partial);
    CHECK(r.nodes >= 2000000);
    CHECK(r.count <= 576);
}

TEST_CASE("count_all table shape") {
    EnumerateOptions opt;
    opt.node_budget = 200000;  // structure check only, cells flagged partial
    const CountTable t = count_all(builtin("C24"), opt);
    CHECK(t.graph_id == "C24");
    CHECK(t.n == 24);
    REQUIRE(t.rows.size() == 12);
    const FeasibilityReport rep = feasible_pairs(builtin("C24"));
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CHECK(t.rows[i].pair == rep.pairs[i]);
    }

    const CountTable empty = count_all(builtin("C20"), {});
    CHECK(empty.rows.empty());
    CHECK_FALSE(empty.note.empty());
}

TEST_CASE("complemented solutions land in the complement class") {
    const FullereneGraph g = builtin("C24");
    const int n = g.vertex_count();
    const MagicPair partner = complement_pair(n, {57, 108});
    REQUIRE(partner == MagicPair{68, 42});
    for (std::size_t i = 0; i < 10; ++i) {
        Configuration c = c24_57_108().solutions[i * 57];  // spread across the set
        for (int& x : c) {
            x = n + 1 - x;
        }
        CHECK(verify_configuration(g, c, partner));
    }
}
