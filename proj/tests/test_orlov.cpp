#include <doctest.h>

#include "gkz/orlov.hpp"

using namespace gkz::orlov;
using gkz::lattice::Int;

TEST_CASE("build_lg") {
    SUBCASE("cubic curve model") {
        auto model = build_lg({3, {3}});
        REQUIRE(model.problem.num_columns() == 4);
        CHECK(model.problem.weights().at(0, 3) == -3);
        CHECK(model.problem.weights().at(1, 3) == 1);
        CHECK(model.wall == gkz::lattice::IntVec{Int(1), Int(0)});
    }
    SUBCASE("no relations") {
        auto model = build_lg({1, {}});
        CHECK(model.problem.num_columns() == 1);
        auto wc = gkz::toric::wall_crossing(model.problem, model.wall);
        CHECK(wc.mu == 1);
    }
    SUBCASE("intersection of two quadrics in P4") {
        auto model = build_lg({5, {2, 2}});
        auto wc = gkz::toric::wall_crossing(model.problem, model.wall);
        CHECK(wc.mu == 1);
    }
    SUBCASE("validation of the model always passes") {
        for (int n = 1; n <= 8; ++n)
            for (int d1 = 1; d1 <= 5; ++d1) CHECK_NOTHROW(build_lg({n, {d1, d1}}));
    }
}

TEST_CASE("orlov_report trichotomy") {
    SUBCASE("elliptic curve: equivalence") {
        auto rep = orlov_report({3, {3}}, Int(0));
        CHECK(rep.a == 0);
        CHECK(rep.which == OrlovCase::Equivalence);
        CHECK(rep.sigma_side_objects.empty());
        CHECK(rep.lg_side_objects.empty());
    }
    SUBCASE("Fano: sigma side larger") {
        auto rep = orlov_report({5, {2, 2}}, Int(0));
        CHECK(rep.a == 1);
        CHECK(rep.which == OrlovCase::SigmaSideLarger);
        CHECK(rep.sigma_side_objects == std::vector<std::string>{"O_Y(0)"});
    }
    SUBCASE("general type: LG side larger") {
        auto rep = orlov_report({3, {4}}, Int(0));
        CHECK(rep.a == -1);
        CHECK(rep.which == OrlovCase::LGSideLarger);
        CHECK(rep.lg_side_objects == std::vector<std::string>{"k(0)"});
    }
    SUBCASE("anchor shifts the twist labels") {
        auto rep = orlov_report({4, {2}}, Int(1));
        CHECK(rep.a == 2);
        CHECK(rep.sigma_side_objects ==
              std::vector<std::string>{"O_Y(1)", "O_Y(2)"});
        auto rep2 = orlov_report({2, {5}}, Int(2));
        CHECK(rep2.a == -3);
        CHECK(rep2.lg_side_objects ==
              std::vector<std::string>{"k(-2)", "k(-3)", "k(-4)"});
    }
}

TEST_CASE("orlov sweep: engine mu equals n - sum d exactly") {
    for (int n = 1; n <= 8; ++n) {
        for (int c = 0; c <= 3; ++c) {
            // iterate degree tuples with entries 1..5
            std::vector<int> degrees(c, 1);
            for (;;) {
                CISpec spec{n, degrees};
                auto rep = orlov_report(spec, Int(0));
                int sum = 0;
                for (int d : degrees) sum += d;
                CHECK(rep.engine_mu == n - sum);
                CHECK(rep.a == n - sum);
                std::size_t len = rep.sigma_side_objects.size() + rep.lg_side_objects.size();
                Int abs_a = abs(rep.a);
                CHECK(Int(long(len)) == abs_a);
                int pos = c - 1;
                while (pos >= 0 && degrees[std::size_t(pos)] == 5) degrees[std::size_t(pos--)] = 1;
                if (pos < 0) break;
                ++degrees[std::size_t(pos)];
            }
        }
    }
}
