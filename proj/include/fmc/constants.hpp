#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmc/graph.hpp"

namespace fmc {

// A candidate pair of magic constants (pentagon sum, hexagon sum).
struct MagicPair {
    int sp = 0;
    int sh = 0;

    friend bool operator==(const MagicPair&, const MagicPair&) = default;
};

// Coefficients of the magic-sum relation a*S_p + b*S_h = c for a fullerene
// with n vertices: a = 24, b = n - 20, c = 3n(n+1).
struct Relation {
    long long pentagon_coeff = 0;
    long long hexagon_coeff = 0;
    long long rhs = 0;

    bool holds(MagicPair p) const {
        return pentagon_coeff * p.sp + hexagon_coeff * p.sh == rhs;
    }
    // Divided through by gcd of all three entries.
    Relation reduced() const;

    friend bool operator==(const Relation&, const Relation&) = default;
};

// S_h ≡ residue (mod modulus)
struct Congruence {
    int modulus = 1;
    int residue = 0;

    friend bool operator==(const Congruence&, const Congruence&) = default;
};

struct Bounds {
    int min = 0;
    int max = 0;

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

// Everything the number-theoretic filters know about a graph: the relation,
// the mod-8 obstruction, the applicable hexagon-sum congruences, the
// rearrangement bounds, and the surviving candidate pairs (ascending S_h).
struct FeasibilityReport {
    int n = 0;
    Relation relation;
    bool mod8_ok = false;
    std::vector<Congruence> residues;
    std::optional<Bounds> hex_bounds;   // absent when the graph has no hexagons
    std::optional<Bounds> pent_bounds;
    std::vector<MagicPair> pairs;
    std::string note;  // reason when pairs is empty
};

// The exact Diophantine coefficients for n; no solving performed.
// Throws std::invalid_argument unless n is even, n >= 20 and n != 22.
Relation magic_relation(int n);

// False exactly when n ≡ 4 (mod 8): such fullerenes admit no magical
// configuration. True means "not excluded by this test".
bool mod8_feasible(int n);

// The applicable congruence constraints on S_h:
//   S_h ≡ 0 (mod 2) when n ≡ 0 (mod 8); S_h ≡ 3 (mod 4) when n ≡ ±2 (mod 8);
//   additionally S_h ≡ 0 (mod 3) when n ≢ 2 (mod 3).
// Requires mod8_feasible(n); throws std::invalid_argument otherwise.
std::vector<Congruence> residue_constraints(int n);

// Rearrangement bounds on the hexagon sum: H*S_h equals the hexagon-
// multiplicity-weighted label sum, minimized (maximized) by pairing the
// largest multiplicities with the smallest (largest) labels. Exact rationals
// rounded inward. Throws std::domain_error when the graph has no hexagons.
Bounds hexagon_sum_bounds(const FullereneGraph& g);

// Same argument on pentagon multiplicities p_v = 3 - m_v (12 pentagons).
Bounds pentagon_sum_bounds(const FullereneGraph& g);

// All integer pairs satisfying the relation, the residue constraints and
// both bound filters, sorted by ascending S_h. Empty list is a valid outcome.
FeasibilityReport feasible_pairs(const FullereneGraph& g);

// The Z2 partner of a pair: (5n+5-S_p, 6n+6-S_h).
MagicPair complement_pair(int n, MagicPair p);

}  // namespace fmc
