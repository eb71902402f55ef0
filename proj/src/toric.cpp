#include "gkz/toric.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace gkz::toric {

using lattice::cone_member;
using lattice::ConeMembership;
using lattice::dot;
using lattice::to_rat;

namespace {

void check_dimension(const ValidatedProblem& p, const RatVec& chi) {
    if (chi.size() != p.rank()) throw DomainError("character dimension mismatch");
}

std::vector<long> scale_to_integers(const RatVec& v) {
    Int den_lcm = 1;
    for (const Rat& q : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    IntVec scaled;
    scaled.reserve(v.size());
    for (const Rat& q : v) {
        Rat s = q * Rat(den_lcm);
        assert(s.get_den() == 1);
        scaled.push_back(s.get_num());
    }
    Int g = lattice::vector_gcd(scaled);
    std::vector<long> out;
    out.reserve(v.size());
    for (Int& x : scaled) {
        if (g > 1) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        out.push_back(x.get_si());
    }
    return out;
}

// Lex-ordered k-subsets of {0..n-1}.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

ValidatedProblem validate(GitProblem p) {
    const std::size_t r = p.rank(), n = p.num_columns();
    if (!p.labels.empty() && p.labels.size() != n)
        throw DomainError("label count does not match column count");
    std::vector<IntVec> cols = p.weights.columns();
    for (std::size_t j = 0; j < n; ++j)
        if (r == 0 || lattice::is_zero(cols[j])) throw ZeroColumnError(int(j + 1));
    if (!lattice::strictly_positive_functional(cols).has_value()) {
        auto rel = lattice::positive_relation(cols);
        assert(rel.has_value());
        throw NotProjectiveError(scale_to_integers(*rel));
    }
    ValidatedProblem v;
    v.problem_ = std::move(p);
    v.columns_ = std::move(cols);
    v.column_sum_.assign(r, Int(0));
    for (const IntVec& c : v.columns_)
        for (std::size_t i = 0; i < r; ++i) v.column_sum_[i] += c[i];
    return v;
}

IntVec anticanonical(const ValidatedProblem& p) { return p.column_sum(); }

bool is_semistable(const ValidatedProblem& p, const std::vector<int>& support,
                   const RatVec& chi) {
    check_dimension(p, chi);
    std::vector<IntVec> gens;
    for (int i : support) {
        if (i < 1 || std::size_t(i) > p.num_columns())
            throw DomainError("support index out of range");
        gens.push_back(p.columns()[std::size_t(i) - 1]);
    }
    return cone_member(gens, chi) != ConeMembership::Outside;
}

std::vector<SigmaCone> sigma_bases(const ValidatedProblem& p, const RatVec& chi) {
    check_dimension(p, chi);
    const std::size_t r = p.rank(), n = p.num_columns();
    std::vector<SigmaCone> out;
    for_each_subset(n, r, [&](const std::vector<std::size_t>& idx) {
        IntegerMatrix minor(r, r);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < r; ++i)
                minor.at(i, j) = p.weights().at(i, idx[j]);
        Int det = lattice::determinant(minor);
        if (det == 0) return;
        std::vector<IntVec> gens;
        for (std::size_t j : idx) gens.push_back(p.columns()[j]);
        if (cone_member(gens, chi) == ConeMembership::Outside) return;
        SigmaCone sc;
        for (std::size_t j : idx) sc.columns.push_back(int(j + 1));
        sc.index = abs(det);
        out.push_back(std::move(sc));
    });
    return out;
}

ChamberSignature chamber_signature(const ValidatedProblem& p, const RatVec& chi) {
    check_dimension(p, chi);
    const std::size_t r = p.rank(), n = p.num_columns();
    ChamberSignature sig;
    for_each_subset(n, r, [&](const std::vector<std::size_t>& idx) {
        IntegerMatrix minor(r, r);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < r; ++i)
                minor.at(i, j) = p.weights().at(i, idx[j]);
        if (lattice::determinant(minor) == 0) return;
        std::vector<IntVec> gens;
        for (std::size_t j : idx) gens.push_back(p.columns()[j]);
        ConeMembership m = cone_member(gens, chi);
        if (m == ConeMembership::Boundary) {
            std::string cone;
            for (std::size_t j : idx) cone += (cone.empty() ? "" : ",") + std::to_string(j + 1);
            throw OnWallError("character lies on the boundary of sigma cone {" + cone + "}");
        }
        if (m == ConeMembership::RelativeInterior) {
            std::vector<int> cols;
            for (std::size_t j : idx) cols.push_back(int(j + 1));
            sig.push_back(std::move(cols));
        }
    });
    std::sort(sig.begin(), sig.end());
    return sig;
}

Int k0_rank(const ValidatedProblem& p, const RatVec& chi) {
    chamber_signature(p, chi);  // wall detection
    Int total = 0;
    for (const SigmaCone& sc : sigma_bases(p, chi)) total += sc.index;
    return total;
}

std::pair<Int, Int> WallCrossing::twist_range(const Int& d) const {
    return {t_minus - d + 1, t_plus - d};
}

WallCrossing wall_crossing(const ValidatedProblem& p, const IntVec& lambda) {
    if (lambda.size() != p.rank()) throw DomainError("lambda dimension mismatch");
    WallCrossing wc;
    wc.lambda = lambda;
    auto coords = lattice::hyperplane_coordinates(lambda);  // NotPrimitive check
    wc.twist_lift = coords.chi_tw;
    wc.nu_plus = 0;
    wc.nu_minus = 0;
    for (std::size_t i = 0; i < p.num_columns(); ++i) {
        Int w = dot(p.columns()[i], lambda);
        if (w == 0) wc.fixed.push_back(int(i + 1));
        else if (w > 0) wc.nu_plus += w;
        else wc.nu_minus -= w;
        wc.coordinate_weights.push_back(std::move(w));
    }
    wc.t_plus = -wc.nu_plus;
    wc.t_minus = -wc.nu_minus;
    wc.mu = wc.nu_plus - wc.nu_minus;
    assert(wc.mu == dot(p.column_sum(), lambda));
    return wc;
}

std::vector<IntVec> candidate_wall_normals(const ValidatedProblem& p) {
    const std::size_t r = p.rank(), n = p.num_columns();
    if (r == 0) return {};
    std::set<IntVec> normals;
    for_each_subset(n, r - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<IntVec> span;
        for (std::size_t j : idx) span.push_back(p.columns()[j]);
        try {
            normals.insert(lattice::primitive_normal(span, r));
        } catch (const RankError&) {
            // degenerate subset, spans less than a hyperplane
        }
    });
    return {normals.begin(), normals.end()};
}

namespace {

constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                           41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
constexpr int kNumPrimes = int(sizeof(kPrimes) / sizeof(kPrimes[0]));
constexpr int kMaxAttempts = 16;

RatVec perturbation_vector(std::size_t r, int offset) {
    RatVec u(r);
    for (std::size_t i = 0; i < r; ++i)
        u[i] = lattice::make_rat(1, kPrimes[(offset + int(i)) % kNumPrimes]);
    return u;
}

struct RawCrossing {
    Rat t_star;
    IntVec lambda;  // oriented along the path
};

}  // namespace

std::vector<PathCrossing> generic_path(const ValidatedProblem& p, const RatVec& chi,
                                       int seed) {
    check_dimension(p, chi);
    const std::size_t r = p.rank();
    if (r == 0) return {};

    const std::vector<IntVec> normals = candidate_wall_normals(p);
    const ChamberSignature home = chamber_signature(p, chi);  // throws OnWall

    Int max_entry = 1;
    for (const IntVec& nrm : normals)
        for (const Int& x : nrm) {
            Int a = abs(x);
            if (a > max_entry) max_entry = a;
        }

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const int idx = seed + attempt;

        // Perturb chi inside its chamber.
        RatVec u = perturbation_vector(r, idx);
        Rat eps_p = 1;
        bool ok = true;
        for (const IntVec& nrm : normals) {
            Rat a = dot(chi, nrm);
            Rat du = dot(u, nrm);
            if (a == 0) {
                if (du == 0) {
                    ok = false;  // cannot leave this fake hyperplane
                    break;
                }
                continue;
            }
            if (du == 0) continue;
            Rat bound = abs(a) / (2 * abs(du));
            if (bound < eps_p) eps_p = bound;
        }
        if (!ok) continue;
        RatVec start(r);
        for (std::size_t i = 0; i < r; ++i) start[i] = chi[i] + eps_p * u[i];
        for (const IntVec& nrm : normals)
            if (dot(start, nrm) == 0) {
                ok = false;
                break;
            }
        if (!ok || chamber_signature(p, start) != home) continue;

        // Direction: minus a coordinate axis, or minus the anticanonical as
        // the guaranteed fallback, with a tiny generic tilt.
        const int base = idx % int(r + 1);
        RatVec dir(r, Rat(0));
        if (std::size_t(base) < r) dir[std::size_t(base)] = -1;
        else
            for (std::size_t i = 0; i < r; ++i) dir[i] = -Rat(p.column_sum()[i]);
        RatVec tilt = perturbation_vector(r, idx + int(r));
        Rat eps_v = lattice::make_rat(1, Int(4 * int(r)) * (max_entry + 1) * (idx + 1));
        for (std::size_t i = 0; i < r; ++i) dir[i] -= eps_v * tilt[i];

        std::vector<RawCrossing> raw;
        ok = true;
        for (const IntVec& nrm : normals) {
            Rat alpha = dot(start, nrm);
            Rat speed = dot(dir, nrm);
            if (speed == 0) continue;
            Rat t = -alpha / speed;
            if (t <= 0) continue;
            IntVec lam = nrm;
            if (speed < 0)
                for (Int& x : lam) x = -x;
            Int mu = dot(p.column_sum(), lam);
            if (mu == 0) continue;  // equivalence hyperplane, zero copies
            if (mu > 0) {
                ok = false;  // path heads toward the anticanonical side here
                break;
            }
            raw.push_back({t, std::move(lam)});
        }
        if (!ok) continue;
        std::sort(raw.begin(), raw.end(),
                  [](const RawCrossing& a, const RawCrossing& b) { return a.t_star < b.t_star; });
        bool degenerate = false;
        for (std::size_t i = 0; i + 1 < raw.size(); ++i)
            if (raw[i].t_star == raw[i + 1].t_star) {
                degenerate = true;
                break;
            }
        if (degenerate) continue;

        // The path must actually reach the empty chamber: beyond the last
        // crossing the sign pattern is stable, so one sample decides.
        Rat horizon = raw.empty() ? Rat(1) : raw.back().t_star + 1;
        RatVec terminal(r);
        for (std::size_t i = 0; i < r; ++i) terminal[i] = start[i] + horizon * dir[i];
        if (cone_member(p.columns(), terminal) != ConeMembership::Outside) continue;

        std::vector<PathCrossing> out;
        for (RawCrossing& rc : raw) {
            PathCrossing pc;
            pc.t_star = rc.t_star;
            pc.wall_point.resize(r);
            for (std::size_t i = 0; i < r; ++i) pc.wall_point[i] = start[i] + rc.t_star * dir[i];
            pc.crossing = wall_crossing(p, rc.lambda);
            out.push_back(std::move(pc));
        }
        return out;
    }
    throw DegeneratePathError("no generic path found within the seed schedule");
}

WallSubproblem wall_subproblem(const ValidatedProblem& p, const WallCrossing& crossing,
                               const RatVec& wall_point) {
    check_dimension(p, wall_point);
    if (dot(wall_point, crossing.lambda) != 0)
        throw DomainError("wall point does not lie on the crossing hyperplane");
    WallSubproblem sub;
    sub.coords = lattice::hyperplane_coordinates(crossing.lambda);
    std::vector<IntVec> new_cols;
    for (int i : crossing.fixed)
        new_cols.push_back(sub.coords.coords(p.columns()[std::size_t(i) - 1]));
    sub.problem.weights = IntegerMatrix::from_columns(new_cols, p.rank() - 1);
    sub.character = sub.coords.coords(wall_point);
    return sub;
}

SodTree SodTree::unit_leaf() {
    SodTree t;
    t.kind = Kind::UnitLeaf;
    t.rank = 0;
    return t;
}

SodTree SodTree::empty_chamber(std::size_t rank) {
    SodTree t;
    t.kind = Kind::EmptyChamber;
    t.rank = rank;
    return t;
}

SodTree exceptional_collection(const ValidatedProblem& p, const RatVec& chi,
                               const Int& twist_anchor, int seed) {
    check_dimension(p, chi);
    if (p.rank() == 0) return SodTree::unit_leaf();
    if (cone_member(p.columns(), chi) == ConeMembership::Outside)
        return SodTree::empty_chamber(p.rank());

    SodTree node;
    node.kind = SodTree::Kind::Node;
    node.rank = p.rank();
    node.chamber_witness = chi;
    for (PathCrossing& pc : generic_path(p, chi, seed)) {
        WallSubproblem sub = wall_subproblem(p, pc.crossing, pc.wall_point);
        SodTree child;
        if (cone_member(sub.problem.weights.columns(), sub.character) ==
            ConeMembership::Outside) {
            child = SodTree::empty_chamber(p.rank() - 1);
        } else {
            ValidatedProblem vsub = validate(std::move(sub.problem));
            child = exceptional_collection(vsub, sub.character, twist_anchor, seed);
        }
        SodBlock block;
        auto [lo, hi] = pc.crossing.twist_range(twist_anchor);
        for (Int j = lo; j <= hi; ++j) {
            block.twists.push_back(j);
            block.children.push_back(child);
        }
        block.basis = sub.coords.basis;
        block.crossing = std::move(pc);
        node.blocks.push_back(std::move(block));
    }
    return node;
}

namespace {

void flatten_into(const SodTree& tree, const IntegerMatrix& to_root,
                  std::vector<ExceptionalObject::Step>& chain, const IntVec& acc,
                  std::vector<ExceptionalObject>& out) {
    switch (tree.kind) {
        case SodTree::Kind::EmptyChamber:
            return;
        case SodTree::Kind::UnitLeaf: {
            ExceptionalObject obj;
            obj.chain = chain;
            obj.character = acc;
            out.push_back(std::move(obj));
            return;
        }
        case SodTree::Kind::Node:
            break;
    }
    for (const SodBlock& block : tree.blocks) {
        IntVec lifted_tw = to_root.apply(block.crossing.crossing.twist_lift);
        IntegerMatrix child_to_root = to_root.multiplied(block.basis);
        for (std::size_t k = 0; k < block.twists.size(); ++k) {
            const Int& j = block.twists[k];
            IntVec acc2 = acc;
            for (std::size_t i = 0; i < acc2.size(); ++i) acc2[i] += j * lifted_tw[i];
            chain.push_back({block.crossing.crossing.lambda, block.crossing.crossing.fixed, j});
            flatten_into(block.children[k], child_to_root, chain, acc2, out);
            chain.pop_back();
        }
    }
}

}  // namespace

std::vector<ExceptionalObject> flatten(const SodTree& tree) {
    std::vector<ExceptionalObject> out;
    std::vector<ExceptionalObject::Step> chain;
    flatten_into(tree, IntegerMatrix::identity(tree.rank), chain, IntVec(tree.rank, Int(0)),
                 out);
    return out;
}

Int flatten_length(const SodTree& tree) {
    switch (tree.kind) {
        case SodTree::Kind::EmptyChamber:
            return 0;
        case SodTree::Kind::UnitLeaf:
            return 1;
        case SodTree::Kind::Node:
            break;
    }
    Int total = 0;
    for (const SodBlock& block : tree.blocks)
        for (const SodTree& child : block.children) total += flatten_length(child);
    return total;
}

}  // namespace gkz::toric
