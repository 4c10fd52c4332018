#include <doctest.h>

#include <algorithm>
#include <random>

#include "flowncg/canonical.hpp"
#include "flowncg/constructions.hpp"
#include "support/oracle.hpp"

using namespace flowncg;
namespace ts = flowncg::testsupport;

TEST_CASE("labeled codes separate exactly the labeled networks") {
    CapacityNetwork a = build_figure1();
    CapacityNetwork b = build_figure1();
    CHECK(encode_labeled(a) == encode_labeled(b));

    CapacityNetwork c = apply_strategy(a, 3, Strategy{{2, 1}});
    CHECK(encode_labeled(a) != encode_labeled(c));

    NetworkCodeHash hash;
    CHECK(hash(encode_labeled(a)) == hash(encode_labeled(b)));
}

TEST_CASE("labeled codes distinguish direction of ownership") {
    StrategyProfile p1(3, 1);
    p1.strategies[0].add_capacity(1, 1);
    StrategyProfile p2(3, 1);
    p2.strategies[1].add_capacity(0, 1);
    CHECK(encode_labeled(CapacityNetwork::build(p1)) !=
          encode_labeled(CapacityNetwork::build(p2)));
}

TEST_CASE("canonical matrix is invariant under relabeling") {
    std::mt19937_64 rng(131);
    for (int round = 0; round < 15; ++round) {
        int n = 3 + (int)(rng() % 3);
        int k = 1 + (int)(rng() % (std::uint64_t)(n - 1));
        CapacityNetwork net = ts::random_network(n, k, rng);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CapacityNetwork relabeled =
            CapacityNetwork::build(ts::permute_profile(net.profile(), perm));
        CHECK(iso_canonical_matrix(net) == iso_canonical_matrix(relabeled));
        CHECK(isomorphic(net, relabeled));
    }
}

TEST_CASE("canonical matrix is minimal over explicit relabelings") {
    CapacityNetwork net = build_figure1();
    std::vector<int> canon = iso_canonical_matrix(net);
    std::vector<int> perm{0, 1, 2, 3};
    do {
        CapacityNetwork relabeled =
            CapacityNetwork::build(ts::permute_profile(net.profile(), perm));
        std::vector<int> direct(16);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                direct[a * 4 + b] = relabeled.directed_capacity(a, b);
        CHECK(canon <= direct);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("non-isomorphic networks are told apart") {
    CapacityNetwork cycle = build_directed_cycle(4, 1);
    CapacityNetwork empty = CapacityNetwork::build(StrategyProfile(4, 1));
    CHECK_FALSE(isomorphic(cycle, empty));

    StrategyProfile chain(4, 1);
    chain.strategies[0].add_capacity(1, 1);
    chain.strategies[1].add_capacity(2, 1);
    chain.strategies[2].add_capacity(3, 1);
    chain.strategies[3].add_capacity(0, 1);
    CHECK(isomorphic(cycle, CapacityNetwork::build(chain)));

    StrategyProfile path(4, 1);
    path.strategies[0].add_capacity(1, 1);
    path.strategies[1].add_capacity(2, 1);
    path.strategies[2].add_capacity(3, 1);
    CHECK_FALSE(isomorphic(cycle, CapacityNetwork::build(path)));
}

TEST_CASE("relabeled directed cycles are isomorphic but not identical") {
    CapacityNetwork base = build_directed_cycle(5, 2);
    std::vector<int> rot{1, 2, 3, 4, 0};
    CapacityNetwork rotated =
        CapacityNetwork::build(ts::permute_profile(base.profile(), rot));
    CHECK(encode_labeled(base) == encode_labeled(rotated));

    std::vector<int> swap{1, 0, 2, 3, 4};
    CapacityNetwork swapped =
        CapacityNetwork::build(ts::permute_profile(base.profile(), swap));
    CHECK(encode_labeled(base) != encode_labeled(swapped));
    CHECK(isomorphic(base, swapped));
}
