#include <doctest.h>

#include <random>

#include "gkz/toric.hpp"

using namespace gkz::toric;
using gkz::lattice::make_rat;

namespace {

IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

GitProblem from_columns(std::size_t rank, std::initializer_list<IntVec> cols) {
    GitProblem p;
    p.weights = IntegerMatrix::from_columns(std::vector<IntVec>(cols), rank);
    return p;
}

ValidatedProblem projective_space(int n) {
    std::vector<IntVec> cols(std::size_t(n) + 1, iv({1}));
    GitProblem p;
    p.weights = IntegerMatrix::from_columns(cols, 1);
    return validate(std::move(p));
}

ValidatedProblem blowup_p2() {
    return validate(from_columns(2, {iv({1, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})}));
}

ValidatedProblem p1_x_p1() {
    return validate(from_columns(2, {iv({1, 0}), iv({1, 0}), iv({0, 1}), iv({0, 1})}));
}

ValidatedProblem weighted_p(std::initializer_list<long> ws) {
    std::vector<IntVec> cols;
    for (long w : ws) cols.push_back(iv({w}));
    GitProblem p;
    p.weights = IntegerMatrix::from_columns(cols, 1);
    return validate(std::move(p));
}

ValidatedProblem hirzebruch(long a) {
    return validate(from_columns(2, {iv({1, 0}), iv({1, 0}), iv({-a, 1}), iv({0, 1})}));
}

}  // namespace

TEST_CASE("validate") {
    CHECK_NOTHROW(projective_space(2));
    SUBCASE("x1 x2 invariant is rejected with witness") {
        GitProblem p = from_columns(1, {iv({1}), iv({-1})});
        try {
            validate(std::move(p));
            FAIL("expected NotProjectiveError");
        } catch (const gkz::NotProjectiveError& e) {
            CHECK(e.witness == std::vector<long>{1, 1});
        }
    }
    SUBCASE("zero column is rejected") {
        GitProblem p = from_columns(2, {iv({1, 0}), iv({0, 0})});
        try {
            validate(std::move(p));
            FAIL("expected ZeroColumnError");
        } catch (const gkz::ZeroColumnError& e) {
            CHECK(e.column == 2);
        }
    }
    SUBCASE("blow-up of P2 is projective") { CHECK_NOTHROW(blowup_p2()); }
}

TEST_CASE("anticanonical") {
    CHECK(anticanonical(projective_space(2)) == iv({3}));
    CHECK(anticanonical(blowup_p2()) == iv({3, 2}));
    // 3*(1,0) + (-3,1)
    auto orlov = validate(
        from_columns(2, {iv({1, 0}), iv({1, 0}), iv({1, 0}), iv({-3, 1})}));
    CHECK(anticanonical(orlov) == iv({0, 1}));
}

TEST_CASE("is_semistable") {
    auto p2 = projective_space(2);
    CHECK(is_semistable(p2, {1}, rv({2})));
    CHECK_FALSE(is_semistable(p2, {}, rv({1})));
    auto bl = blowup_p2();
    CHECK(is_semistable(bl, {3, 4}, rv({1, 2})));
    CHECK_FALSE(is_semistable(bl, {3, 4}, rv({2, 1})));
}

TEST_CASE("sigma_bases") {
    SUBCASE("P2") {
        auto sb = sigma_bases(projective_space(2), rv({1}));
        REQUIRE(sb.size() == 3);
        for (const auto& sc : sb) CHECK(sc.index == 1);
    }
    SUBCASE("P(1,1,2)") {
        auto sb = sigma_bases(weighted_p({1, 1, 2}), rv({1}));
        REQUIRE(sb.size() == 3);
        CHECK(sb[0].index == 1);
        CHECK(sb[1].index == 1);
        CHECK(sb[2].index == 2);
    }
    SUBCASE("blow-up of P2 at chi=(2,1)") {
        auto sb = sigma_bases(blowup_p2(), rv({2, 1}));
        std::vector<std::vector<int>> subsets;
        for (const auto& sc : sb) {
            subsets.push_back(sc.columns);
            CHECK(sc.index == 1);
        }
        std::vector<std::vector<int>> expected = {{1, 3}, {1, 4}, {2, 3}, {2, 4}};
        CHECK(subsets == expected);
    }
}

TEST_CASE("chamber_signature") {
    auto p2 = projective_space(2);
    CHECK(chamber_signature(p2, rv({1})) == chamber_signature(p2, rv({7})));
    auto bl = blowup_p2();
    CHECK(chamber_signature(bl, rv({2, 1})) != chamber_signature(bl, rv({1, 2})));
    CHECK_THROWS_AS(chamber_signature(bl, rv({1, 1})), gkz::OnWallError);
    SUBCASE("scaling invariance") {
        CHECK(chamber_signature(bl, rv({2, 1})) == chamber_signature(bl, rv({10, 5})));
    }
}

TEST_CASE("k0_rank") {
    CHECK(k0_rank(projective_space(2), rv({1})) == 3);
    CHECK(k0_rank(weighted_p({1, 1, 2}), rv({1})) == 4);
    CHECK(k0_rank(blowup_p2(), rv({2, 1})) == 4);
}

TEST_CASE("wall_crossing") {
    SUBCASE("P2 boundary wall") {
        auto wc = wall_crossing(projective_space(2), iv({-1}));
        CHECK(wc.nu_plus == 0);
        CHECK(wc.nu_minus == 3);
        CHECK(wc.t_plus == 0);
        CHECK(wc.t_minus == -3);
        CHECK(wc.mu == -3);
        CHECK(wc.fixed.empty());
        auto [lo, hi] = wc.twist_range(Int(0));
        CHECK(lo == -2);
        CHECK(hi == 0);
    }
    SUBCASE("blow-up interior wall") {
        auto wc = wall_crossing(blowup_p2(), iv({-1, 1}));
        CHECK(wc.coordinate_weights == iv({-1, -1, 1, 0}));
        CHECK(wc.nu_plus == 1);
        CHECK(wc.nu_minus == 2);
        CHECK(wc.mu == -1);
        CHECK(wc.fixed == std::vector<int>{4});
        CHECK(gkz::lattice::dot(wc.twist_lift, wc.lambda) == 1);
    }
    SUBCASE("Orlov wall has mu = n - sum d") {
        auto lg = validate(from_columns(
            2, {iv({1, 0}), iv({1, 0}), iv({1, 0}), iv({1, 0}), iv({1, 0}),
                iv({-2, 1}), iv({-2, 1})}));
        auto wc = wall_crossing(lg, iv({1, 0}));
        CHECK(wc.mu == 5 - 4);
    }
    SUBCASE("imprimitive lambda is rejected") {
        CHECK_THROWS_AS(wall_crossing(projective_space(2), iv({-2})), gkz::NotPrimitiveError);
    }
}

TEST_CASE("generic_path pinned cases") {
    SUBCASE("P2: one crossing through the origin wall") {
        auto path = generic_path(projective_space(2), rv({1}), 0);
        REQUIRE(path.size() == 1);
        CHECK(path[0].crossing.lambda == iv({-1}));
        CHECK(path[0].crossing.mu == -3);
    }
    SUBCASE("blow-up of P2 at (2,1): diagonal ray then vertical ray") {
        auto path = generic_path(blowup_p2(), rv({2, 1}), 0);
        REQUIRE(path.size() >= 2);
        CHECK(path[0].crossing.lambda == iv({-1, 1}));
        CHECK(path[0].crossing.mu == -1);
        CHECK(path[1].crossing.lambda == iv({-1, 0}));
        CHECK(path[1].crossing.mu == -3);
        for (const auto& pc : path) CHECK(pc.crossing.mu < 0);
    }
    SUBCASE("P1 x P1: two crossings of mu = -2") {
        auto path = generic_path(p1_x_p1(), rv({1, 1}), 0);
        REQUIRE(path.size() == 2);
        CHECK(path[0].crossing.mu == -2);
        CHECK(path[1].crossing.mu == -2);
    }
    SUBCASE("crossing points are ordered and off other walls") {
        auto path = generic_path(blowup_p2(), rv({2, 1}), 0);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            CHECK(path[i].t_star < path[i + 1].t_star);
    }
    SUBCASE("on-wall input is rejected") {
        CHECK_THROWS_AS(generic_path(blowup_p2(), rv({1, 1}), 0), gkz::OnWallError);
    }
}

TEST_CASE("wall_subproblem pinned cases") {
    SUBCASE("P2 final wall gives the rank-zero base case") {
        auto p2 = projective_space(2);
        auto wc = wall_crossing(p2, iv({-1}));
        auto sub = wall_subproblem(p2, wc, RatVec{Rat(0)});
        CHECK(sub.problem.rank() == 0);
        CHECK(sub.problem.num_columns() == 0);
        CHECK(sub.character.empty());
    }
    SUBCASE("blow-up first crossing gives a point") {
        auto bl = blowup_p2();
        auto wc = wall_crossing(bl, iv({-1, 1}));
        auto sub = wall_subproblem(bl, wc, rv({1, 1}));
        CHECK(sub.problem.rank() == 1);
        REQUIRE(sub.problem.num_columns() == 1);
        // single column, character on the same side
        Int col = sub.problem.weights.at(0, 0);
        CHECK(col * sub.character[0] > 0);
    }
    SUBCASE("P1 x P1 wall gives a P1 fiber") {
        auto p = p1_x_p1();
        auto wc = wall_crossing(p, iv({-1, 0}));
        auto sub = wall_subproblem(p, wc, rv({0, 1}));
        CHECK(sub.problem.rank() == 1);
        REQUIRE(sub.problem.num_columns() == 2);
        CHECK(sub.problem.weights.at(0, 0) == sub.problem.weights.at(0, 1));
        CHECK(sub.character[0] * Rat(sub.problem.weights.at(0, 0)) > 0);
    }
}

TEST_CASE("exceptional_collection pinned cases") {
    SUBCASE("P2: one block of three unit leaves, twists {-2,-1,0}") {
        auto tree = exceptional_collection(projective_space(2), rv({1}), Int(0), 0);
        REQUIRE(tree.kind == SodTree::Kind::Node);
        REQUIRE(tree.blocks.size() == 1);
        CHECK(tree.blocks[0].twists == std::vector<Int>{Int(-2), Int(-1), Int(0)});
        auto objs = flatten(tree);
        REQUIRE(objs.size() == 3);
        // chi_tw = (-1) is forced by <chi_tw, -1> = 1, so the accumulated
        // characters run 2, 1, 0 as the twists ascend.
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(objs[i].chain.size() == 1);
            CHECK(objs[i].chain[0].twist == long(i) - 2);
            CHECK(objs[i].character == iv({2 - long(i)}));
        }
    }
    SUBCASE("P(1,1,2) flattens to 4") {
        auto tree = exceptional_collection(weighted_p({1, 1, 2}), rv({1}), Int(0), 0);
        CHECK(flatten_length(tree) == 4);
    }
    SUBCASE("blow-up of P2: point block then a 3-block, 4 leaves") {
        auto tree = exceptional_collection(blowup_p2(), rv({2, 1}), Int(0), 0);
        REQUIRE(tree.kind == SodTree::Kind::Node);
        // nonvacuous blocks: (1 copy x 1 leaf) then (3 copies x 1 leaf)
        std::vector<std::pair<std::size_t, Int>> shape;
        for (const auto& block : tree.blocks) {
            Int per_copy = flatten_length(block.children.front());
            if (per_copy != 0) shape.push_back({block.twists.size(), per_copy});
        }
        REQUIRE(shape.size() == 2);
        CHECK(shape[0] == std::pair<std::size_t, Int>{1, Int(1)});
        CHECK(shape[1] == std::pair<std::size_t, Int>{3, Int(1)});
        CHECK(flatten_length(tree) == 4);
    }
    SUBCASE("chain depth equals the rank of the root problem") {
        auto tree = exceptional_collection(blowup_p2(), rv({2, 1}), Int(0), 0);
        for (const auto& obj : flatten(tree)) CHECK(obj.chain.size() == 2);
    }
    SUBCASE("unit leaf flattens to a single empty-chain object") {
        auto objs = flatten(SodTree::unit_leaf());
        REQUIRE(objs.size() == 1);
        CHECK(objs[0].chain.empty());
        CHECK(objs[0].character.empty());
    }
}

TEST_CASE("flatten length equals k0_rank on presets") {
    struct Case {
        ValidatedProblem p;
        RatVec chi;
    };
    std::vector<Case> cases;
    cases.push_back({projective_space(1), rv({1})});
    cases.push_back({projective_space(3), rv({2})});
    cases.push_back({weighted_p({1, 2, 3}), rv({1})});
    cases.push_back({p1_x_p1(), rv({1, 1})});
    cases.push_back({blowup_p2(), rv({2, 1})});
    cases.push_back({hirzebruch(1), rv({1, 1})});
    cases.push_back({hirzebruch(2), rv({1, 1})});
    cases.push_back({hirzebruch(3), rv({1, 1})});
    for (const auto& c : cases) {
        Int expected = k0_rank(c.p, c.chi);
        for (int seed : {0, 1, 2}) {
            auto tree = exceptional_collection(c.p, c.chi, Int(0), seed);
            CHECK(flatten_length(tree) == expected);
        }
    }
}

TEST_CASE("mu identities along generic paths") {
    auto bl = blowup_p2();
    IntVec total = anticanonical(bl);
    for (const auto& pc : generic_path(bl, rv({2, 1}), 0)) {
        const WallCrossing& wc = pc.crossing;
        CHECK(wc.mu == wc.nu_plus - wc.nu_minus);
        CHECK(wc.mu == gkz::lattice::dot(total, wc.lambda));
        CHECK(wc.t_plus <= 0);
        CHECK(wc.t_minus <= 0);
        // anticanonical strictly on the near side
        CHECK(gkz::lattice::dot(total, wc.lambda) < 0);
    }
}

TEST_CASE("randomized toric problems: oracle equivalence") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> rank_d(1, 3), ncols_d(1, 6), entry_d(-3, 3);
    int done = 0;
    while (done < 25) {
        std::size_t r = rank_d(rng);
        std::size_t n = std::size_t(ncols_d(rng)) + r;
        std::vector<IntVec> cols(n, IntVec(r));
        for (auto& c : cols)
            for (auto& x : c) x = entry_d(rng);
        GitProblem gp;
        gp.weights = IntegerMatrix::from_columns(cols, r);
        ValidatedProblem p;
        try {
            p = validate(std::move(gp));
        } catch (const gkz::DomainError&) {
            continue;
        }
        // random character in the effective cone: positive combination
        RatVec chi(r, Rat(0));
        for (const auto& c : cols) {
            int coeff = 1 + (entry_d(rng) + 3);
            for (std::size_t i = 0; i < r; ++i) chi[i] += Rat(coeff) * Rat(c[i]);
        }
        Int expected;
        try {
            expected = k0_rank(p, chi);
        } catch (const gkz::OnWallError&) {
            continue;
        }
        SodTree tree;
        try {
            tree = exceptional_collection(p, chi, Int(0), 0);
        } catch (const gkz::DegeneratePathError&) {
            continue;  // bounded schedule exhausted; rare and honest
        }
        CHECK(flatten_length(tree) == expected);

        // scale invariance chi -> 5 chi
        RatVec chi5(r);
        for (std::size_t i = 0; i < r; ++i) chi5[i] = chi[i] * 5;
        CHECK(flatten_length(exceptional_collection(p, chi5, Int(0), 0)) == expected);
        ++done;
    }
}
