#include "gkz/orlov.hpp"

#include <cassert>

namespace gkz::orlov {

using lattice::dot;
using lattice::IntegerMatrix;

LgModel build_lg(const CISpec& spec) {
    if (spec.n < 1) throw DomainError("need at least one variable");
    for (int d : spec.degrees)
        if (d < 1) throw DomainError("relation degrees must be positive");

    std::vector<IntVec> cols;
    for (int i = 0; i < spec.n; ++i) cols.push_back({Int(1), Int(0)});
    for (int d : spec.degrees) cols.push_back({Int(-d), Int(1)});

    LgModel model;
    toric::GitProblem gp;
    gp.weights = IntegerMatrix::from_columns(cols, 2);
    model.problem = toric::validate(std::move(gp));
    model.wall = {Int(1), Int(0)};
    model.potential_character = {Int(0), Int(1)};
    assert(dot(model.potential_character, model.wall) == 0);
    return model;
}

OrlovReport orlov_report(const CISpec& spec, const Int& d) {
    LgModel model = build_lg(spec);
    toric::WallCrossing wc = toric::wall_crossing(model.problem, model.wall);

    Int degree_sum = 0;
    for (int deg : spec.degrees) degree_sum += deg;
    Int a = Int(spec.n) - degree_sum;
    if (a != wc.mu)
        throw InternalMismatchError("closed form a = " + a.get_str() +
                                    " disagrees with engine mu = " + wc.mu.get_str());

    OrlovReport rep;
    rep.a = a;
    rep.engine_mu = wc.mu;
    rep.sigma_side_desc = "P^{n-1} complete intersection side";
    rep.lg_side_desc = "graded singularity category side";
    if (a > 0) {
        rep.which = OrlovCase::SigmaSideLarger;
        for (Int j = d; j <= a + d - 1; ++j)
            rep.sigma_side_objects.push_back("O_Y(" + j.get_str() + ")");
    } else if (a == 0) {
        rep.which = OrlovCase::Equivalence;
    } else {
        rep.which = OrlovCase::LGSideLarger;
        for (Int j = -d; j >= a - d + 1; --j)
            rep.lg_side_objects.push_back("k(" + j.get_str() + ")");
    }
    return rep;
}

std::string case_name(OrlovCase c) {
    switch (c) {
        case OrlovCase::SigmaSideLarger:
            return "SigmaSideLarger";
        case OrlovCase::Equivalence:
            return "Equivalence";
        case OrlovCase::LGSideLarger:
            return "LGSideLarger";
    }
    return "unknown";
}

}  // namespace gkz::orlov
