#include <doctest.h>

#include <random>

#include "flowncg/constructions.hpp"
#include "flowncg/network.hpp"
#include "support/oracle.hpp"

using namespace flowncg;
namespace ts = flowncg::testsupport;

namespace {

StrategyProfile four_node_profile() {
    StrategyProfile p(4, 2);
    p.strategies[0] = Strategy{{1, 1}, {3, 1}};
    p.strategies[1] = Strategy{{0, 1}, {3, 1}};
    p.strategies[2] = Strategy{{1, 1}, {3, 1}};
    p.strategies[3] = Strategy{{2, 2}};
    return p;
}

} // namespace

TEST_CASE("four-node example network has the expected capacities") {
    CapacityNetwork net = CapacityNetwork::build(four_node_profile());
    const int v = 0, x = 1, y = 2, z = 3;
    CHECK(net.undirected_capacity(v, x) == 2);
    CHECK(net.undirected_capacity(v, z) == 1);
    CHECK(net.undirected_capacity(x, z) == 1);
    CHECK(net.undirected_capacity(x, y) == 1);
    CHECK(net.undirected_capacity(y, z) == 3);
    CHECK(net.undirected_capacity(v, y) == 0);
    CHECK(net.degree(z) == 5);
    CHECK(net.degree(v) == 3);
    CHECK(net.degree(x) == 4);
    CHECK(net.degree(y) == 4);
}

TEST_CASE("empty profile builds the edgeless network") {
    CapacityNetwork net = CapacityNetwork::build(StrategyProfile(3, 1));
    CHECK(net.edges().empty());
    CHECK(net.total_directed_capacity() == 0);
    for (int a = 0; a < 3; ++a) CHECK(net.degree(a) == 0);
}

TEST_CASE("budget violation is rejected naming the agent") {
    StrategyProfile p(3, 1);
    p.strategies[1] = Strategy{{0, 1}, {2, 1}};
    CHECK_THROWS_WITH_AS(CapacityNetwork::build(p),
                         doctest::Contains("agent 1"), ValidationError);
}

TEST_CASE("undirected view is the sum of the two directed capacities") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 30; ++round) {
        CapacityNetwork net = ts::random_network(5, 3, rng);
        for (int a = 0; a < 5; ++a) {
            for (int b = 0; b < 5; ++b) {
                CHECK(net.undirected_capacity(a, b) ==
                      net.directed_capacity(a, b) + net.directed_capacity(b, a));
                CHECK(net.undirected_capacity(a, b) == net.undirected_capacity(b, a));
            }
        }
    }
}

TEST_CASE("apply_strategy recomputes the undirected view") {
    CapacityNetwork net = CapacityNetwork::build(four_node_profile());
    const int v = 0, x = 1, y = 2, z = 3;
    CapacityNetwork changed = apply_strategy(net, z, Strategy{{y, 1}, {v, 1}});
    CHECK(changed.undirected_capacity(y, z) == 2);
    CHECK(changed.undirected_capacity(v, z) == 2);
    CHECK(changed.undirected_capacity(x, z) == 1);
    CHECK(net.undirected_capacity(y, z) == 3);
}

TEST_CASE("apply_strategy with the current strategy is the identity") {
    CapacityNetwork net = CapacityNetwork::build(four_node_profile());
    CapacityNetwork same = apply_strategy(net, 2, net.strategy_of(2));
    CHECK(same == net);
}

TEST_CASE("apply_strategy rejects infeasible replacements") {
    CapacityNetwork net = CapacityNetwork::build(four_node_profile());
    CHECK_THROWS_AS(apply_strategy(net, 0, Strategy{{1, 3}}), ValidationError);
    CHECK_THROWS_AS(apply_strategy(net, 0, Strategy{{0, 1}}), ValidationError);
    CHECK(net.undirected_capacity(0, 1) == 2);
}

TEST_CASE("edges are sorted by owner then target") {
    CapacityNetwork net = CapacityNetwork::build(four_node_profile());
    auto edges = net.edges();
    REQUIRE(edges.size() == 7);
    for (size_t i = 1; i < edges.size(); ++i) {
        bool ordered = edges[i - 1].owner < edges[i].owner ||
                       (edges[i - 1].owner == edges[i].owner &&
                        edges[i - 1].target < edges[i].target);
        CHECK(ordered);
    }
    CHECK(edges.front() == DirectedEdge{0, 1, 1});
    CHECK(edges.back() == DirectedEdge{3, 2, 2});
}

TEST_CASE("handshake bound over random profiles") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 40; ++round) {
        int n = 3 + (int)(rng() % 4);
        int k = 1 + (int)(rng() % (std::uint64_t)(n - 1));
        CapacityNetwork net = ts::random_network(n, k, rng);
        long long degree_sum = 0;
        for (int a = 0; a < n; ++a) degree_sum += net.degree(a);
        CHECK(degree_sum == 2 * net.total_directed_capacity());
        CHECK(degree_sum <= 2LL * n * k);
    }
}

TEST_CASE("profile round-trips through the network") {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 20; ++round) {
        StrategyProfile p = ts::random_profile(4, 2, rng);
        CapacityNetwork net = CapacityNetwork::build(p);
        CHECK(net.profile() == p);
    }
}

TEST_CASE("directed cycle nodes all have degree 2k") {
    for (int k = 1; k <= 3; ++k) {
        CapacityNetwork net = build_directed_cycle(5, k);
        for (int a = 0; a < 5; ++a) CHECK(net.degree(a) == 2 * k);
    }
}

TEST_CASE("name metadata survives apply_strategy") {
    CapacityNetwork net = build_figure1();
    REQUIRE(net.names().size() == 4);
    CHECK(net.names().at("z") == 3);
    CapacityNetwork changed = apply_strategy(net, 3, Strategy{{2, 1}});
    CHECK(changed.names() == net.names());
}
