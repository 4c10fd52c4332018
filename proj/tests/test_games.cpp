#include <doctest.h>

#include <random>

#include "flowncg/constructions.hpp"
#include "flowncg/games.hpp"
#include "support/oracle.hpp"

using namespace flowncg;
namespace ts = flowncg::testsupport;

TEST_CASE("game kind names") {
    CHECK(game_kind_name(GameKind::AvgFlow) == "avg");
    CHECK(game_kind_name(GameKind::MinFlow) == "min");
    CHECK(parse_game_kind("avg") == GameKind::AvgFlow);
    CHECK(parse_game_kind("min") == GameKind::MinFlow);
    CHECK_THROWS_AS(parse_game_kind("median"), std::invalid_argument);
}

TEST_CASE("four-node example utilities") {
    CapacityNetwork net = build_figure1();
    const int v = 0, x = 1, y = 2, z = 3;

    CHECK(agent_utility(net, z, GameKind::AvgFlow).avg == Rational(10, 3));
    CHECK(agent_utility(net, y, GameKind::AvgFlow).avg == Rational(10, 3));
    CHECK(agent_utility(net, v, GameKind::AvgFlow).avg == Rational(3));
    CHECK(agent_utility(net, x, GameKind::AvgFlow).avg == Rational(3));
    CHECK(social_utility(net, GameKind::AvgFlow) == Rational(19, 6));

    UtilityValue uz = agent_utility(net, z, GameKind::MinFlow);
    CHECK(uz.u1 == 3);
    CHECK(uz.u2 == 1);
    UtilityValue uv = agent_utility(net, v, GameKind::MinFlow);
    CHECK(uv.u1 == 3);
    CHECK(uv.u2 == 0);
    CHECK(social_utility(net, GameKind::MinFlow) == Rational(3));
}

TEST_CASE("edgeless network utilities are zero") {
    CapacityNetwork net = CapacityNetwork::build(StrategyProfile(3, 1));
    for (int a = 0; a < 3; ++a) {
        UtilityValue um = agent_utility(net, a, GameKind::MinFlow);
        CHECK(um.u1 == 0);
        CHECK(um.u2 == 0);
        CHECK(agent_utility(net, a, GameKind::AvgFlow).avg == Rational(0));
    }
    CHECK(social_utility(net, GameKind::AvgFlow) == Rational(0));
    CHECK(social_utility(net, GameKind::MinFlow) == Rational(0));
}

TEST_CASE("optimal construction yields utility 2k for everyone") {
    CapacityNetwork net = build_opt(6, 3);
    for (int a = 0; a < 6; ++a) {
        CHECK(agent_utility(net, a, GameKind::AvgFlow).avg == Rational(6));
        UtilityValue um = agent_utility(net, a, GameKind::MinFlow);
        CHECK(um.u1 == 6);
        CHECK(um.u2 == 0);
    }
    CHECK(social_utility(net, GameKind::AvgFlow) == Rational(6));
    CHECK(social_utility(net, GameKind::MinFlow) == Rational(6));
}

TEST_CASE("chain equilibrium has min-game first component k+1") {
    CapacityNetwork net = build_min_game_worst_ne(5, 2);
    for (int a = 0; a < 5; ++a)
        CHECK(agent_utility(net, a, GameKind::MinFlow).u1 == 3);
}

TEST_CASE("circle family social utility") {
    CHECK(social_utility(build_avg_game_circle_ne(5, 2), GameKind::AvgFlow) ==
          Rational(5, 2));
    CHECK(social_utility(build_avg_game_circle_ne(6, 2), GameKind::AvgFlow) ==
          Rational(12, 5));
}

TEST_CASE("utility comparison is lexicographic for the min game") {
    CHECK(compare(UtilityValue::minimum(3, 0), UtilityValue::minimum(2, 7)) > 0);
    CHECK(compare(UtilityValue::minimum(3, 2), UtilityValue::minimum(3, 5)) < 0);
    CHECK(compare(UtilityValue::minimum(3, 5), UtilityValue::minimum(3, 5)) == 0);
    CHECK(compare(UtilityValue::average(Rational(10, 3)),
                  UtilityValue::average(Rational(7, 2))) < 0);
    CHECK_THROWS_AS(compare(UtilityValue::average(Rational(1)),
                            UtilityValue::minimum(1, 0)),
                    std::invalid_argument);
    CHECK(better(UtilityValue::minimum(3, 0), UtilityValue::minimum(2, 7)));
    CHECK_FALSE(better(UtilityValue::minimum(2, 7), UtilityValue::minimum(3, 0)));
}

TEST_CASE("utility string forms") {
    CHECK(UtilityValue::average(Rational(10, 3)).str() == "10/3");
    CHECK(UtilityValue::average(Rational(4)).str() == "4");
    CHECK(UtilityValue::minimum(3, 1).str() == "(3,1)");
}

TEST_CASE("social utility never exceeds 2k") {
    std::mt19937_64 rng(811);
    for (int round = 0; round < 40; ++round) {
        int n = 3 + (int)(rng() % 4);
        int k = 1 + (int)(rng() % (std::uint64_t)(n - 1));
        CapacityNetwork net = ts::random_network(n, k, rng);
        CHECK(social_utility(net, GameKind::AvgFlow) <= Rational(2 * k));
        CHECK(social_utility(net, GameKind::MinFlow) <= Rational(2 * k));
    }
}

TEST_CASE("min-game first component is global for every agent") {
    std::mt19937_64 rng(907);
    for (int round = 0; round < 25; ++round) {
        CapacityNetwork net = ts::random_network(5, 2, rng);
        long long lambda = global_connectivity(net);
        for (int a = 0; a < 5; ++a) {
            UtilityValue u = agent_utility(net, a, GameKind::MinFlow);
            CHECK(u.u1 == lambda);
            CHECK(u.u2 <= 4);
        }
    }
}

TEST_CASE("raising a capacity never lowers the owner's average utility") {
    std::mt19937_64 rng(1009);
    for (int round = 0; round < 25; ++round) {
        CapacityNetwork net = ts::random_network(5, 3, rng);
        int agent = (int)(rng() % 5);
        if (net.strategy_of(agent).total_capacity() >= 3) continue;
        int target = (int)(rng() % 4);
        if (target >= agent) ++target;
        Strategy raised = net.strategy_of(agent);
        raised.add_capacity(target, 1);
        CapacityNetwork bigger = apply_strategy(net, agent, raised);
        CHECK(agent_utility(bigger, agent, GameKind::AvgFlow).avg >=
              agent_utility(net, agent, GameKind::AvgFlow).avg);
    }
}

TEST_CASE("matrix-reusing evaluation matches direct evaluation") {
    std::mt19937_64 rng(1103);
    for (int round = 0; round < 20; ++round) {
        CapacityNetwork net = ts::random_network(5, 2, rng);
        AllPairsConnectivity conn = all_pairs_matrix(net);
        for (int a = 0; a < 5; ++a) {
            for (GameKind kind : {GameKind::AvgFlow, GameKind::MinFlow}) {
                CHECK(compare(agent_utility_from(conn, a, kind),
                              agent_utility(net, a, kind)) == 0);
            }
        }
        CHECK(social_utility_from(conn, GameKind::AvgFlow) ==
              social_utility(net, GameKind::AvgFlow));
        CHECK(social_utility_from(conn, GameKind::MinFlow) ==
              social_utility(net, GameKind::MinFlow));
    }
}
