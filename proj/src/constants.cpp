#include "fmc/constants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fmc {

Relation Relation::reduced() const {
    long long g = std::gcd(std::gcd(pentagon_coeff, hexagon_coeff), rhs);
    if (g == 0) {
        return *this;
    }
    return Relation{pentagon_coeff / g, hexagon_coeff / g, rhs / g};
}

Relation magic_relation(int n) {
    if (n < 20 || n % 2 != 0 || n == 22) {
        throw std::invalid_argument("no fullerene with n = " + std::to_string(n) +
                                    " (need even n >= 20, n != 22)");
    }
    const long long nn = n;
    return Relation{24, nn - 20, 3 * nn * (nn + 1)};
}

bool mod8_feasible(int n) {
    return n % 8 != 4;
}

std::vector<Congruence> residue_constraints(int n) {
    if (!mod8_feasible(n)) {
        throw std::invalid_argument("n = " + std::to_string(n) + " is already excluded (n ≡ 4 mod 8)");
    }
    std::vector<Congruence> out;
    const int r8 = ((n % 8) + 8) % 8;
    if (r8 == 0) {
        out.push_back({2, 0});
    } else if (r8 == 2 || r8 == 6) {
        out.push_back({4, 3});
    }
    if (((n % 3) + 3) % 3 != 2) {
        out.push_back({3, 0});
    }
    return out;
}

namespace {

// min/max of sum(w_v * label_v) over label permutations, by the rearrangement
// inequality: sort weights descending against labels ascending (min) or
// descending (max).
std::pair<long long, long long> weighted_label_extremes(std::vector<int> weights) {
    std::sort(weights.begin(), weights.end(), std::greater<int>());
    const int n = static_cast<int>(weights.size());
    long long lo = 0, hi = 0;
    for (int i = 0; i < n; ++i) {
        lo += static_cast<long long>(weights[i]) * (i + 1);
        hi += static_cast<long long>(weights[i]) * (n - i);
    }
    return {lo, hi};
}

Bounds face_sum_bounds(const std::vector<int>& multiplicities, long long face_count) {
    auto [lo, hi] = weighted_label_extremes(multiplicities);
    // round inward: min up, max down
    const long long bmin = (lo + face_count - 1) / face_count;
    const long long bmax = hi / face_count;
    return Bounds{static_cast<int>(bmin), static_cast<int>(bmax)};
}

}  // namespace

Bounds hexagon_sum_bounds(const FullereneGraph& g) {
    if (g.hexagon_count() == 0) {
        throw std::domain_error("graph " + g.id() + " has no hexagons; hexagon-sum bounds undefined");
    }
    return face_sum_bounds(incidence_profile(g).hex_multiplicity, g.hexagon_count());
}

Bounds pentagon_sum_bounds(const FullereneGraph& g) {
    return face_sum_bounds(incidence_profile(g).pent_multiplicity, g.pentagon_count());
}

FeasibilityReport feasible_pairs(const FullereneGraph& g) {
    FeasibilityReport rep;
    rep.n = g.vertex_count();
    rep.relation = magic_relation(rep.n);
    rep.mod8_ok = mod8_feasible(rep.n);
    if (!rep.mod8_ok) {
        rep.note = "relation has no integer solution (n ≡ 4 mod 8)";
        return rep;
    }
    rep.residues = residue_constraints(rep.n);
    rep.pent_bounds = pentagon_sum_bounds(g);
    if (g.hexagon_count() == 0) {
        // only n = 20, and 20 ≡ 4 (mod 8) is caught above; kept for clarity
        rep.note = "no hexagons and no integer solution for the pentagon sum";
        return rep;
    }
    rep.hex_bounds = hexagon_sum_bounds(g);

    const Relation& rel = rep.relation;
    for (int sh = rep.hex_bounds->min; sh <= rep.hex_bounds->max; ++sh) {
        bool ok = true;
        for (const Congruence& c : rep.residues) {
            if (sh % c.modulus != c.residue) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        const long long num = rel.rhs - rel.hexagon_coeff * sh;
        if (num <= 0 || num % rel.pentagon_coeff != 0) {
            continue;
        }
        const long long sp = num / rel.pentagon_coeff;
        if (sp < rep.pent_bounds->min || sp > rep.pent_bounds->max) {
            continue;
        }
        rep.pairs.push_back({static_cast<int>(sp), sh});
    }
    if (rep.pairs.empty()) {
        rep.note = "no pair satisfies the relation, residue and bound filters";
    }
    return rep;
}

MagicPair complement_pair(int n, MagicPair p) {
    return MagicPair{5 * n + 5 - p.sp, 6 * n + 6 - p.sh};
}

}  // namespace fmc
