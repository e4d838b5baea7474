#pragma once

#include <cstdint>
#include <vector>

#include "fmc/graph.hpp"
#include "fmc/search.hpp"

namespace fmc {

// perm[i] = image of vertex i+1, values 1..n.
using VertexPermutation = std::vector<int>;

// All vertex permutations preserving the face structure, closed under
// composition and inverse, identity included.
struct AutomorphismGroup {
    std::vector<VertexPermutation> elements;
    std::size_t order() const { return elements.size(); }
};

// Complete automorphism group of g's face structure, found by backtracking
// on vertex images with adjacency consistency, then filtered to permutations
// that map every face to a face of the same size. Group axioms are checked
// before returning; a violation means a bug and throws std::logic_error.
AutomorphismGroup automorphisms(const FullereneGraph& g);

// Minimal-ish generating set: greedy accumulation until the generated
// subgroup is the whole group. Deterministic.
std::vector<VertexPermutation> generators(const AutomorphismGroup& grp);

// f composed with sigma: out[v-1] = c[sigma[v-1]-1]. Preserves both magic
// constants when sigma is an automorphism. Throws std::invalid_argument
// when sigma is not a permutation of 1..n or lengths differ.
Configuration apply_automorphism(const Configuration& c, const VertexPermutation& sigma);

// Label involution x -> n+1-x. Maps constants (S_p,S_h) to
// (5n+5-S_p, 6n+6-S_h); see complement_pair in constants.hpp.
Configuration complement(const Configuration& c);

struct OrbitReport {
    MagicPair pair{};
    std::uint64_t orbit_count = 0;
    std::uint64_t orbit_size = 0;  // uniform across orbits; 0 for an empty set
    std::vector<Configuration> representatives;  // lex-least of each orbit, sorted
};

// Partition s.solutions into orbits under grp. Orbit sizes are uniform for
// any set of injective labelings (f∘sigma = f forces sigma = id); a
// non-uniform size therefore signals corrupted input and throws
// std::logic_error. Throws std::invalid_argument when s.count > 0 but no
// solutions were stored.
OrbitReport orbit_partition(const SolutionSet& s, const AutomorphismGroup& grp);

// True iff no nontrivial group element fixes any stored solution.
bool check_free_action(const SolutionSet& s, const AutomorphismGroup& grp);

}  // namespace fmc
