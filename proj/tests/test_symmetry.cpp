#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "fmc/constants.hpp"
#include "fmc/graph.hpp"
#include "fmc/search.hpp"
#include "fmc/symmetry.hpp"

using namespace fmc;

namespace {

// Face set as sorted vertex lists, for an order-free comparison.
std::set<std::vector<int>> face_key(const FullereneGraph& g) {
    std::set<std::vector<int>> keys;
    for (const Face& f : g.faces()) {
        std::vector<int> k = f;
        std::sort(k.begin(), k.end());
        keys.insert(k);
    }
    return keys;
}

bool preserves_faces(const FullereneGraph& g, const VertexPermutation& sigma) {
    const std::set<std::vector<int>> keys = face_key(g);
    for (const Face& f : g.faces()) {
        std::vector<int> im;
        im.reserve(f.size());
        for (int v : f) {
            im.push_back(sigma[static_cast<std::size_t>(v - 1)]);
        }
        std::sort(im.begin(), im.end());
        if (keys.count(im) == 0) {
            return false;
        }
    }
    return true;
}

VertexPermutation compose(const VertexPermutation& a, const VertexPermutation& b) {
    VertexPermutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[static_cast<std::size_t>(b[i] - 1)];
    }
    return out;
}

const SolutionSet& c26_72_63() {
    static const SolutionSet s = [] {
        EnumerateOptions opt;
        opt.sorted = true;
        opt.store_solutions = true;
        return enumerate_configurations(builtin("C26"), {72, 63}, opt);
    }();
    return s;
}

}  // namespace

TEST_CASE("group orders") {
    CHECK(automorphisms(builtin("C20")).order() == 120);
    CHECK(automorphisms(builtin("C24")).order() == 24);
    CHECK(automorphisms(builtin("C26")).order() == 12);
}

TEST_CASE("every element is a face-preserving permutation") {
    for (const char* name : {"C24", "C26"}) {
        const FullereneGraph g = builtin(name);
        const AutomorphismGroup grp = automorphisms(g);
        const int n = g.vertex_count();
        for (const VertexPermutation& sigma : grp.elements) {
            REQUIRE(sigma.size() == static_cast<std::size_t>(n));
            std::vector<bool> hit(static_cast<std::size_t>(n), false);
            for (int x : sigma) {
                REQUIRE(x >= 1);
                REQUIRE(x <= n);
                hit[static_cast<std::size_t>(x - 1)] = true;
            }
            CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
            CHECK(preserves_faces(g, sigma));
        }
    }
}

TEST_CASE("closure, identity and inverses") {
    const FullereneGraph g = builtin("C24");
    const AutomorphismGroup grp = automorphisms(g);
    std::set<VertexPermutation> all(grp.elements.begin(), grp.elements.end());
    CHECK(all.size() == grp.order());  // no duplicates

    VertexPermutation id(static_cast<std::size_t>(g.vertex_count()));
    std::iota(id.begin(), id.end(), 1);
    CHECK(all.count(id) == 1);

    for (const VertexPermutation& a : grp.elements) {
        bool has_inverse = false;
        for (const VertexPermutation& b : grp.elements) {
            CHECK(all.count(compose(a, b)) == 1);
            has_inverse = has_inverse || compose(a, b) == id;
        }
        CHECK(has_inverse);
    }
}

TEST_CASE("generators span the group") {
    for (const char* name : {"C24", "C26"}) {
        const AutomorphismGroup grp = automorphisms(builtin(name));
        const std::vector<VertexPermutation> gens = generators(grp);
        CHECK(!gens.empty());
        CHECK(gens.size() < grp.order());  // generating set, not the group itself

        std::set<VertexPermutation> span(gens.begin(), gens.end());
        VertexPermutation id(gens.front().size());
        std::iota(id.begin(), id.end(), 1);
        span.insert(id);
        for (bool grew = true; grew;) {
            grew = false;
            std::vector<VertexPermutation> snapshot(span.begin(), span.end());
            for (const auto& a : snapshot) {
                for (const auto& b : snapshot) {
                    grew = span.insert(compose(a, b)).second || grew;
                }
            }
        }
        std::set<VertexPermutation> all(grp.elements.begin(), grp.elements.end());
        CHECK(span == all);
    }
}

TEST_CASE("relabeling along an automorphism") {
    const FullereneGraph g = builtin("C26");
    const AutomorphismGroup grp = automorphisms(g);
    const Configuration& c = c26_72_63().solutions.front();

    for (const VertexPermutation& sigma : grp.elements) {
        const Configuration moved = apply_automorphism(c, sigma);
        CHECK(verify_configuration(g, moved, {72, 63}));
    }

    VertexPermutation id(c.size());
    std::iota(id.begin(), id.end(), 1);
    CHECK(apply_automorphism(c, id) == c);

    VertexPermutation broken = id;
    broken[0] = broken[1];
    CHECK_THROWS_AS(apply_automorphism(c, broken), std::invalid_argument);
    CHECK_THROWS_AS(apply_automorphism(c, VertexPermutation{1, 2}), std::invalid_argument);
}

TEST_CASE("complement flips a solution into the partner class") {
    const FullereneGraph g = builtin("C26");
    const MagicPair partner = complement_pair(26, {72, 63});
    for (std::size_t i = 0; i < c26_72_63().solutions.size(); i += 11) {
        const Configuration& c = c26_72_63().solutions[i];
        const Configuration flipped = complement(c);
        CHECK(verify_configuration(g, flipped, partner));
        CHECK(complement(flipped) == c);
    }
}

TEST_CASE("orbit partition of a full class") {
    const SolutionSet& s = c26_72_63();
    REQUIRE(s.count == 84);
    const AutomorphismGroup grp = automorphisms(builtin("C26"));
    const OrbitReport rep = orbit_partition(s, grp);
    CHECK(rep.pair == MagicPair{72, 63});
    CHECK(rep.orbit_size == grp.order());
    CHECK(rep.orbit_count == 7);
    CHECK(rep.orbit_count * rep.orbit_size == s.count);
    REQUIRE(rep.representatives.size() == 7);
    CHECK(std::is_sorted(rep.representatives.begin(), rep.representatives.end()));

    // Each representative is the lexicographic minimum of its own orbit.
    for (const Configuration& r : rep.representatives) {
        for (const VertexPermutation& sigma : grp.elements) {
            CHECK(r <= apply_automorphism(r, sigma));
        }
    }

    CHECK(check_free_action(s, grp));
}

TEST_CASE("orbit partition contract errors") {
    const AutomorphismGroup grp = automorphisms(builtin("C26"));

    SolutionSet empty;
    empty.graph_id = "C26";
    empty.pair = {73, 59};
    const OrbitReport rep = orbit_partition(empty, grp);
    CHECK(rep.orbit_count == 0);
    CHECK(rep.orbit_size == 0);
    CHECK(rep.representatives.empty());

    SolutionSet counted_but_hollow;
    counted_but_hollow.pair = {72, 63};
    counted_but_hollow.count = 84;  // claims a count, carries no solutions
    CHECK_THROWS_AS(orbit_partition(counted_but_hollow, grp), std::invalid_argument);
}
