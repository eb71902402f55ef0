#pragma once

#include <string>
#include <vector>

#include "gkz/toric.hpp"

namespace gkz::orlov {

using lattice::Int;
using lattice::IntVec;

// Graded complete intersection data: n variables of degree one, c relations
// of degrees d_j. The polynomials themselves never matter here.
struct CISpec {
    int n = 1;
    std::vector<int> degrees;
};

enum class OrlovCase { SigmaSideLarger, Equivalence, LGSideLarger };

struct OrlovReport {
    Int a;  // Gorenstein parameter n - sum d_j
    OrlovCase which;
    std::vector<std::string> sigma_side_objects;  // O_Y(d)..O_Y(a+d-1) when a > 0
    std::vector<std::string> lg_side_objects;     // k(-d)..k(a-d+1) when a < 0
    Int engine_mu;                                // independently computed mu
    std::string sigma_side_desc;
    std::string lg_side_desc;
};

struct LgModel {
    toric::ValidatedProblem problem;  // rank-2 gauged model
    IntVec wall;                      // lambda = (1, 0)
    IntVec potential_character;       // (0, 1), orthogonal to the wall
};

// The rank-2 gauged Landau-Ginzburg model of the complete intersection:
// columns (1,0) for each variable and (-d_j, 1) for each relation, with the
// potential transforming by (0,1).
LgModel build_lg(const CISpec& spec);

OrlovReport orlov_report(const CISpec& spec, const Int& d);

std::string case_name(OrlovCase c);

}  // namespace gkz::orlov
