#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gkz/lattice.hpp"

namespace gkz::toric {

using lattice::Int;
using lattice::IntegerMatrix;
using lattice::IntVec;
using lattice::Rat;
using lattice::RatVec;

// Linear torus action on affine space: G = G_m^rank acting on A^n with the
// character beta_i of the i-th coordinate as column i.
struct GitProblem {
    IntegerMatrix weights;             // rank x n, columns beta_i
    std::vector<std::string> labels;   // empty or one per column

    std::size_t rank() const { return weights.rows(); }
    std::size_t num_columns() const { return weights.cols(); }
};

// A GitProblem that passed validate(): no zero columns and a strictly
// positive functional exists (projectivity).
class ValidatedProblem {
  public:
    const GitProblem& problem() const { return problem_; }
    const IntegerMatrix& weights() const { return problem_.weights; }
    std::size_t rank() const { return problem_.rank(); }
    std::size_t num_columns() const { return problem_.num_columns(); }
    const std::vector<IntVec>& columns() const { return columns_; }
    const IntVec& column_sum() const { return column_sum_; }

  private:
    friend ValidatedProblem validate(GitProblem p);
    GitProblem problem_;
    std::vector<IntVec> columns_;
    IntVec column_sum_;
};

ValidatedProblem validate(GitProblem p);

// Weight of the anticanonical bundle: the sum of the columns.
IntVec anticanonical(const ValidatedProblem& p);

// A point with coordinate support `support` (1-based) is semistable for chi
// iff chi lies in the rational cone of the supported columns.
bool is_semistable(const ValidatedProblem& p, const std::vector<int>& support,
                   const RatVec& chi);

struct SigmaCone {
    std::vector<int> columns;  // 1-based, sorted, size == rank
    Int index;                 // |det| of the column minor
};

// All full-rank simplicial column subsets whose cone contains chi.
std::vector<SigmaCone> sigma_bases(const ValidatedProblem& p, const RatVec& chi);

using ChamberSignature = std::vector<std::vector<int>>;

// Canonical chamber identifier: the sorted set of full-rank sigma subsets
// containing chi. Throws OnWallError when chi sits on the boundary of some
// full-rank sigma cone.
ChamberSignature chamber_signature(const ValidatedProblem& p, const RatVec& chi);

// Sum of sigma indices: the length of any full exceptional collection on the
// chamber's quotient (brute-force oracle for the tree synthesis).
Int k0_rank(const ValidatedProblem& p, const RatVec& chi);

// One wall's full invariant package for an oriented primitive lambda.
struct WallCrossing {
    IntVec lambda;             // oriented toward the far chamber
    IntVec coordinate_weights; // w_i = <beta_i, lambda>
    std::vector<int> fixed;    // 1-based indices with w_i == 0
    Int nu_plus, nu_minus;     // sums of positive / negated negative weights
    Int t_plus, t_minus;       // window widths: -nu_plus, -nu_minus
    Int mu;                    // nu_plus - nu_minus = <sum beta, lambda>
    IntVec twist_lift;         // chi_tw with <chi_tw, lambda> = 1

    // Integer twist interval [t_minus - d + 1, t_plus - d]; |interval| = |mu|
    // when mu < 0.
    std::pair<Int, Int> twist_range(const Int& d) const;
};

WallCrossing wall_crossing(const ValidatedProblem& p, const IntVec& lambda);

struct PathCrossing {
    Rat t_star;          // crossing parameter along the path
    RatVec wall_point;   // chi_0, in the relative interior of its hyperplane
    WallCrossing crossing;
};

// Deterministic generic path: from a perturbation of chi, cross every
// candidate wall hyperplane on the way out of (and beyond) the effective
// cone, oriented so mu < 0 at every returned crossing; mu = 0 hyperplanes are
// equivalences and are passed through silently. The seed selects the
// perturbation/direction schedule.
std::vector<PathCrossing> generic_path(const ValidatedProblem& p, const RatVec& chi,
                                       int seed);

// Primitive normals of all candidate wall hyperplanes (spans of rank-(r-1)
// column subsets), lexicographically-positive representatives, sorted.
std::vector<IntVec> candidate_wall_normals(const ValidatedProblem& p);

struct WallSubproblem {
    GitProblem problem;               // rank r-1 problem on the fixed columns
    RatVec character;                 // coordinates of the wall point
    lattice::HyperplaneCoords coords; // lattice data of lambda-perp
};

// The wall's GIT quotient data: fixed columns rewritten in coordinates on
// lambda-perp together with the wall character.
WallSubproblem wall_subproblem(const ValidatedProblem& p, const WallCrossing& crossing,
                               const RatVec& wall_point);

struct SodTree;

struct SodBlock {
    PathCrossing crossing;
    IntegerMatrix basis;          // embedding of the wall lattice into this level
    std::vector<Int> twists;      // ascending, |twists| = |mu|
    std::vector<SodTree> children;  // one per twist (identical subproblems)
};

// Recursive semi-orthogonal decomposition certificate.
struct SodTree {
    enum class Kind { UnitLeaf, EmptyChamber, Node };
    Kind kind = Kind::UnitLeaf;
    std::size_t rank = 0;
    RatVec chamber_witness;        // for Node
    std::vector<SodBlock> blocks;  // for Node, in path order

    static SodTree unit_leaf();
    static SodTree empty_chamber(std::size_t rank);
};

SodTree exceptional_collection(const ValidatedProblem& p, const RatVec& chi,
                               const Int& twist_anchor, int seed);

struct ExceptionalObject {
    struct Step {
        IntVec lambda;           // in the lattice of its level
        std::vector<int> fixed;  // 1-based within its level's problem
        Int twist;
    };
    std::vector<Step> chain;  // root to leaf
    IntVec character;         // sum of twisted lifts in the root lattice
};

// Depth-first linearization preserving block order and twist order.
std::vector<ExceptionalObject> flatten(const SodTree& tree);

Int flatten_length(const SodTree& tree);

}  // namespace gkz::toric
