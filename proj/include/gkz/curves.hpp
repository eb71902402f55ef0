#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gkz/lattice.hpp"

namespace gkz::curves {

using lattice::Int;
using lattice::Rat;
using lattice::RatVec;

// Mark subsets are sorted 1-based index lists. A hyperplane H_I is shared
// between I and its complement; the canonical representative is the smaller
// side, ties broken by containing mark 1.
using Subset = std::vector<int>;

Subset complement_subset(const Subset& s, int n);
Subset canonical_form(const Subset& s, int n);
bool is_canonical(const Subset& s, int n);
std::vector<Subset> canonical_subsets(int n);  // proper nonempty representatives

enum class Group { SL2, PGL2 };

struct PnLinearization {
    int n = 3;
    std::vector<Rat> weights;  // d_i > 0
    Group group = Group::SL2;
};

// mu(O(d), lambda, x*) = (sum_I d - sum_Ic d) / 2 for the orientation I.
Rat hm_weight_pn(const std::vector<Rat>& d, const Subset& oriented);

// Empty semistable locus: some d_i0 exceeds the sum of the others.
bool is_empty_pn(const std::vector<Rat>& d);

// Semistability of a point with the given coincidence partition.
bool is_semistable_pn(const std::vector<Rat>& d, const std::vector<Subset>& partition);

// Sign of sum_I d - sum_Ic d per canonical subset; a zero marks a wall.
std::vector<std::pair<Subset, int>> chamber_sign_pn(const std::vector<Rat>& d);

struct ParityCount {
    Int even = 0;
    Int odd = 0;
    bool operator==(const ParityCount&) const = default;
};

// Exceptional-collection size of P_n //_d SL2, split by the action of the
// center: wall blocks contribute one object of each parity per copy, boundary
// chambers double the (n-1)-point count with a parity swap, and three points
// give one object of each parity.
ParityCount collection_count_pn(const std::vector<Rat>& d);

// Counts along distinct admissible boundary reductions, for the
// path-independence suite. Returns at most max_paths successful runs.
std::vector<ParityCount> collection_count_paths(const std::vector<Rat>& d,
                                                std::size_t max_paths);

// Even part of the SL2 count; requires sum d even after integer scaling.
Int pgl2_count(const std::vector<Rat>& d);

// Linearization on the stage-j Fulton-MacPherson space: the pullback of O(d)
// twisted by nonpositive multiples a_S of the exceptional divisors.
struct FmLinearization {
    int n = 3;
    int stage = 0;             // blow-up stage j; F_0 = (P^1)^n
    std::vector<Rat> weights;  // d
    std::map<Subset, Rat> divisor_coeffs;  // a_S <= 0
    int divisor_bound = 0;     // smallest |S| carrying a divisor
    int mu_bound = 0;          // smallest |S| entering the mu formula

    static FmLinearization make(int n, int stage, std::vector<Rat> d,
                                std::map<Subset, Rat> a);
};

// The Hassett preset: a_S = -1/(100 * 2^(n-|S|)) on every divisor, weights 2
// (perturbed off the equal-split walls when n is even).
FmLinearization hassett_preset(int n, int stage);

Rat fm_weight(const FmLinearization& lin, const Subset& oriented);

// mu of the crossing of H_{j,I}; its sign must match sign(|I| - |I^c|).
Int fm_wall_mu(const FmLinearization& lin, const Subset& oriented);

bool fm_is_empty(const FmLinearization& lin);

struct AbyssCrossing {
    Subset oriented;        // side whose weight increases; |I| <= |I^c|
    RatVec crossing_weights;  // d-part of the path at the wall
    Int mu;
};

struct AbyssCertificate {
    std::vector<AbyssCrossing> crossings;  // ordered along the path
    RatVec terminal_weights;               // d-part of the endpoint
    int empty_witness;                     // mark with positive singleton weight
};

// A straight slide of the d-part into an empty chamber with the divisor part
// held fixed; every crossed wall has its small side increasing.
AbyssCertificate find_abyss_path(const FmLinearization& lin, int seed);

}  // namespace gkz::curves
