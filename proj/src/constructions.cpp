#include "flowncg/constructions.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace flowncg {

CyclePolicy parse_cycle_policy(const std::string &name) {
    if (name == "distinct-offsets") return CyclePolicy::DistinctOffsets;
    if (name == "repeat-canonical") return CyclePolicy::RepeatCanonical;
    throw ValidationError("unknown cycle policy \"" + name +
                          "\" (expected \"distinct-offsets\" or \"repeat-canonical\")");
}

namespace {

void require_params(int n, int k, int min_n, const char *what) {
    if (n < min_n)
        throw ValidationError(std::string(what) + ": n must be at least " +
                              std::to_string(min_n) + ", got " + std::to_string(n));
    if (k < 1 || k >= n)
        throw ValidationError(std::string(what) + ": k must satisfy 1 <= k < n, got k=" +
                              std::to_string(k) + " with n=" + std::to_string(n));
}

} // namespace

CapacityNetwork build_opt(int n, int k, CyclePolicy policy) {
    require_params(n, k, 3, "build_opt");
    StrategyProfile profile;
    profile.n = n;
    profile.k = k;
    profile.strategies.resize(n);

    std::vector<int> offsets;
    if (policy == CyclePolicy::DistinctOffsets) {
        for (int d = 1; d < n; ++d)
            if (std::gcd(d, n) == 1) offsets.push_back(d);
    } else {
        offsets.push_back(1);
    }

    for (int cycle = 0; cycle < k; ++cycle) {
        int d = offsets[cycle % static_cast<int>(offsets.size())];
        for (int v = 0; v < n; ++v)
            profile.strategies[v].add_capacity((v + d) % n, 1);
    }
    return CapacityNetwork::build(profile);
}

CapacityNetwork build_directed_cycle(int n, int k) {
    require_params(n, k, 3, "build_directed_cycle");
    StrategyProfile profile;
    profile.n = n;
    profile.k = k;
    profile.strategies.resize(n);
    for (int v = 0; v < n; ++v)
        profile.strategies[v].add_capacity((v + 1) % n, k);
    return CapacityNetwork::build(profile);
}

CapacityNetwork build_min_game_worst_ne(int n, int k) {
    require_params(n, k, 2, "build_min_game_worst_ne");
    // Nodes are a chain v1..vn (ids 0..n-1). The first k nodes exchange
    // decreasing-forward / increasing-backward capacities, vk buys one unit
    // towards vn, and every later node buys capacity k backwards.
    StrategyProfile profile;
    profile.n = n;
    profile.k = k;
    profile.strategies.resize(n);
    for (int i = 1; i < k; ++i) {
        profile.strategies[i - 1].add_capacity(i, k - (i - 1));
        profile.strategies[i].add_capacity(i - 1, i);
    }
    profile.strategies[k - 1].add_capacity(n - 1, 1);
    for (int i = k; i <= n - 1; ++i)
        profile.strategies[i].add_capacity(i - 1, k);
    return CapacityNetwork::build(profile);
}

std::pair<int, Strategy> min_game_worst_ne_witness(int n, int k) {
    require_params(n, k, 3, "min_game_worst_ne_witness");
    if (k < 2)
        throw ValidationError("min_game_worst_ne_witness: requires k >= 2, got k=" +
                              std::to_string(k));
    // Agent v2 (id 1) drops its unit edge to v1 and spends it on vn instead.
    CapacityNetwork net = build_min_game_worst_ne(n, k);
    Strategy s = net.strategy_of(1);
    s.erase_target(0);
    s.add_capacity(n - 1, 1);
    return {1, s};
}

CapacityNetwork build_avg_game_circle_ne(int n, int k) {
    require_params(n, k, 3, "build_avg_game_circle_ne");
    if (k < 2)
        throw ValidationError("build_avg_game_circle_ne: requires k >= 2, got k=" +
                              std::to_string(k));
    StrategyProfile profile;
    profile.n = n;
    profile.k = k;
    profile.strategies.resize(n);
    for (int i = 0; i < k; ++i)
        profile.strategies[i].add_capacity((i + 1) % k, k);
    for (int v = k; v < n; ++v)
        for (int i = 0; i < k; ++i)
            profile.strategies[v].add_capacity(i, 1);
    return CapacityNetwork::build(profile);
}

CapacityNetwork build_avg_game_star_ne(int n, int k) {
    require_params(n, k, 3, "build_avg_game_star_ne");
    if (n < k + 2)
        throw ValidationError("build_avg_game_star_ne: requires n >= k+2, got n=" +
                              std::to_string(n) + ", k=" + std::to_string(k));
    // Center c = 0, inner spokes a_1..a_{k-1} = 1..k-1, chain b_1..b_{n-k}
    // = k..n-1. Every node other than the center ends with degree k+1.
    StrategyProfile profile;
    profile.n = n;
    profile.k = k;
    profile.strategies.resize(n);
    const int c = 0;
    for (int i = 1; i <= k - 1; ++i) {
        profile.strategies[c].add_capacity(i, 1);
        profile.strategies[i].add_capacity(c, k);
    }
    const int b_first = k;
    const int b_last = n - 1;
    profile.strategies[c].add_capacity(b_first, 1);
    for (int b = b_first; b < b_last; ++b) {
        if (k >= 2) profile.strategies[b].add_capacity(c, k - 1);
        profile.strategies[b].add_capacity(b + 1, 1);
    }
    profile.strategies[b_last].add_capacity(c, k);
    return CapacityNetwork::build(profile);
}

CapacityNetwork build_figure1() {
    StrategyProfile profile;
    profile.n = 4;
    profile.k = 2;
    profile.strategies.resize(4);
    const int v = 0, x = 1, y = 2, z = 3;
    profile.strategies[v].add_capacity(x, 1);
    profile.strategies[v].add_capacity(z, 1);
    profile.strategies[x].add_capacity(v, 1);
    profile.strategies[x].add_capacity(z, 1);
    profile.strategies[y].add_capacity(x, 1);
    profile.strategies[y].add_capacity(z, 1);
    profile.strategies[z].add_capacity(y, 2);
    CapacityNetwork net = CapacityNetwork::build(profile);
    net.set_names({{"v", v}, {"x", x}, {"y", y}, {"z", z}});
    return net;
}

} // namespace flowncg
