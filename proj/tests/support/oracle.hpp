#pragma once

// Brute-force reference implementations and deterministic instance
// generators for the test suite. Exponential on purpose; n stays small.

#include <cstdint>
#include <random>
#include <vector>

#include "flowncg/network.hpp"
#include "flowncg/strategy.hpp"

namespace flowncg::testsupport {

// Minimum crossing capacity over all bipartitions separating u and v,
// by enumerating every subset containing u and excluding v. n <= 20.
inline long long min_bipartition_cut(const std::vector<int> &cap, int n, int u, int v) {
    long long best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (!((mask >> u) & 1u) || ((mask >> v) & 1u)) continue;
        long long crossing = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (((mask >> a) & 1u) != ((mask >> b) & 1u)) crossing += cap[a * n + b];
        if (best < 0 || crossing < best) best = crossing;
    }
    return best;
}

// Minimum crossing capacity over all proper bipartitions (node 0 fixed to
// one side so each cut is counted once).
inline long long min_global_cut(const std::vector<int> &cap, int n) {
    long long best = -1;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        if (!(mask & 1u)) continue;
        long long crossing = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (((mask >> a) & 1u) != ((mask >> b) & 1u)) crossing += cap[a * n + b];
        if (best < 0 || crossing < best) best = crossing;
    }
    return best;
}

inline unsigned long long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (unsigned long long)(a - b + i) / (unsigned long long)i;
    return r;
}

// Number of feasible strategies for one agent: weak compositions of every
// total 0..k into n-1 parts, which telescopes to C(n-1+k, k).
inline unsigned long long strategy_count_oracle(int n, int k) {
    return binomial(n - 1 + k, k);
}

// Deterministic random feasible profile: each agent spends a uniform total
// in 0..k, one unit at a time on uniform random targets.
inline StrategyProfile random_profile(int n, int k, std::mt19937_64 &rng) {
    StrategyProfile p(n, k);
    for (int v = 0; v < n; ++v) {
        int spend = (int)(rng() % (std::uint64_t)(k + 1));
        for (int i = 0; i < spend; ++i) {
            int t = (int)(rng() % (std::uint64_t)(n - 1));
            if (t >= v) ++t;
            p.strategies[v].add_capacity(t, 1);
        }
    }
    return p;
}

inline CapacityNetwork random_network(int n, int k, std::mt19937_64 &rng) {
    return CapacityNetwork::build(random_profile(n, k, rng));
}

// Applies a node relabeling: node v's strategy moves to perm[v] and every
// target t becomes perm[t]. Preserves feasibility.
inline StrategyProfile permute_profile(const StrategyProfile &p, const std::vector<int> &perm) {
    StrategyProfile out(p.n, p.k);
    for (int v = 0; v < p.n; ++v) {
        Strategy s;
        for (const auto &pur : p.strategies[v].purchases)
            s.add_capacity(perm[pur.target], pur.capacity);
        out.strategies[perm[v]] = s;
    }
    return out;
}

// Two disjoint unit-capacity triangles on nodes {0,1,2} and {3,4,5}.
inline CapacityNetwork disjoint_triangles() {
    StrategyProfile p(6, 1);
    p.strategies[0].add_capacity(1, 1);
    p.strategies[1].add_capacity(2, 1);
    p.strategies[2].add_capacity(0, 1);
    p.strategies[3].add_capacity(4, 1);
    p.strategies[4].add_capacity(5, 1);
    p.strategies[5].add_capacity(3, 1);
    return CapacityNetwork::build(p);
}

} // namespace flowncg::testsupport
