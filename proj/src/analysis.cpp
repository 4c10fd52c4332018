#include "flowncg/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

#include "flowncg/canonical.hpp"
#include "flowncg/connectivity.hpp"
#include "flowncg/dynamics.hpp"
#include "flowncg/maxflow.hpp"

namespace flowncg {

ProfileSpace::ProfileSpace(int n, int k, unsigned long long budget) : n_(n), k_(k) {
    per_agent_strat_.resize(n);
    for (int v = 0; v < n; ++v) per_agent_strat_[v] = enumerate_strategies(n, k, v);
    const unsigned long long per = per_agent_strat_[0].size();
    unsigned long long count = 1;
    bool overflow = false;
    for (int v = 0; v < n; ++v) {
        if (count > ~0ull / per) {
            overflow = true;
            break;
        }
        count *= per;
    }
    if (overflow || count > budget) throw BudgetExceeded(overflow ? ~0ull : count, budget);
    count_ = count;
}

StrategyProfile ProfileSpace::profile_at(unsigned long long index) const {
    if (index >= count_)
        throw ValidationError("profile index " + std::to_string(index) +
                              " out of range (count " + std::to_string(count_) + ")");
    StrategyProfile profile(n_, k_);
    const unsigned long long per = per_agent_count();
    for (int v = n_ - 1; v >= 0; --v) {
        profile.strategies[v] = per_agent_strat_[v][index % per];
        index /= per;
    }
    return profile;
}

namespace {

struct CensusChunk {
    std::vector<unsigned long long> ne_indices;
    std::vector<Rational> ne_socials;
    std::optional<Rational> min_ne, max_ne;
    std::optional<Rational> opt;
    std::set<std::vector<int>> iso;
};

void census_chunk(const ProfileSpace &space, GameKind kind, unsigned long long begin,
                  unsigned long long end, CensusChunk &out) {
    for (unsigned long long i = begin; i < end; ++i) {
        CapacityNetwork net = CapacityNetwork::build(space.profile_at(i));
        Rational social = social_utility(net, kind);
        if (!out.opt || social.compare(*out.opt) > 0) out.opt = social;
        if (!is_nash(net, kind)) continue;
        out.ne_indices.push_back(i);
        out.ne_socials.push_back(social);
        if (!out.min_ne || social.compare(*out.min_ne) < 0) out.min_ne = social;
        if (!out.max_ne || social.compare(*out.max_ne) > 0) out.max_ne = social;
        out.iso.insert(iso_canonical_matrix(net));
    }
}

} // namespace

NeCensus ne_census(int n, int k, GameKind kind, int threads, unsigned long long budget) {
    ProfileSpace space(n, k, budget);
    const unsigned long long count = space.profile_count();
    threads = std::max(1, threads);

    // Fixed-size chunks keyed by index make the merged result structurally
    // identical for every thread count.
    const unsigned long long chunk_size = 4096;
    const unsigned long long chunk_count = (count + chunk_size - 1) / chunk_size;
    std::vector<CensusChunk> chunks((size_t)chunk_count);

    auto worker_run = [&](std::atomic<unsigned long long> &next) {
        while (true) {
            unsigned long long c = next.fetch_add(1);
            if (c >= chunk_count) break;
            census_chunk(space, kind, c * chunk_size,
                         std::min(count, (c + 1) * chunk_size), chunks[(size_t)c]);
        }
    };

    std::atomic<unsigned long long> next{0};
    if (threads == 1) {
        worker_run(next);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back([&] { worker_run(next); });
        for (std::thread &t : pool) t.join();
    }

    NeCensus census;
    census.n = n;
    census.k = k;
    census.kind = kind;
    census.profile_count = count;
    std::set<std::vector<int>> iso;
    std::optional<Rational> opt;
    for (CensusChunk &chunk : chunks) {
        census.ne_indices.insert(census.ne_indices.end(), chunk.ne_indices.begin(),
                                 chunk.ne_indices.end());
        census.ne_socials.insert(census.ne_socials.end(), chunk.ne_socials.begin(),
                                 chunk.ne_socials.end());
        if (chunk.opt && (!opt || chunk.opt->compare(*opt) > 0)) opt = *chunk.opt;
        if (chunk.min_ne &&
            (!census.min_ne_social || chunk.min_ne->compare(*census.min_ne_social) < 0))
            census.min_ne_social = *chunk.min_ne;
        if (chunk.max_ne &&
            (!census.max_ne_social || chunk.max_ne->compare(*census.max_ne_social) > 0))
            census.max_ne_social = *chunk.max_ne;
        iso.merge(chunk.iso);
    }
    census.ne_labeled_count = census.ne_indices.size();
    census.ne_iso_count = iso.size();
    census.opt_social = opt.value();
    if (n >= 3 && census.opt_social.compare(Rational(2 * k)) != 0)
        throw std::logic_error("ne_census: optimum social utility differs from 2k");
    if (census.min_ne_social) census.poa = census.opt_social / *census.min_ne_social;
    if (census.max_ne_social) census.pos = census.opt_social / *census.max_ne_social;
    return census;
}

namespace {

// Connected components among active nodes over positive capacities, each
// sorted ascending, ordered by smallest member.
std::vector<std::vector<int>> components_of(const std::vector<int> &cap, int n,
                                            const std::vector<char> &active) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (!active[s] || seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t head = 0; head < comp.size(); ++head) {
            int u = comp[head];
            for (int v = 0; v < n; ++v)
                if (active[v] && !seen[v] && cap[u * n + v] > 0) {
                    seen[v] = 1;
                    comp.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace

std::optional<std::vector<int>> find_cluster(const CapacityNetwork &net, int j) {
    if (j < 1)
        throw ValidationError("find_cluster: j must be at least 1, got " + std::to_string(j));
    const int n = net.n();
    std::vector<int> cap = net.undirected_matrix();
    std::vector<char> active(n, 1);

    while (true) {
        std::vector<std::vector<int>> comps = components_of(cap, n, active);
        bool any_big = false;
        bool cut_done = false;
        for (const std::vector<int> &comp : comps) {
            if (comp.size() < 2) {
                active[comp[0]] = 0;
                continue;
            }
            any_big = true;
            const int m = (int)comp.size();
            std::vector<int> sub(m * m, 0);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) sub[a * m + b] = cap[comp[a] * n + comp[b]];
            GomoryHuTree tree = gomory_hu_from_matrix(sub, m);
            long long min_cut = tree.weight[1];
            int min_i = 1;
            for (int i = 2; i < m; ++i)
                if (tree.weight[i] < min_cut) {
                    min_cut = tree.weight[i];
                    min_i = i;
                }
            if (min_cut >= j) return comp;
            if (!cut_done) {
                // split the first undersized component along its weakest cut
                std::vector<char> side;
                max_flow_with_cut(sub, m, min_i, tree.parent[min_i], side);
                for (int a = 0; a < m; ++a)
                    for (int b = 0; b < m; ++b)
                        if (side[a] && !side[b]) {
                            cap[comp[a] * n + comp[b]] = 0;
                            cap[comp[b] * n + comp[a]] = 0;
                        }
                cut_done = true;
            }
        }
        if (!any_big) return std::nullopt;
    }
}

NeAuditReport audit_ne(const CapacityNetwork &net, GameKind kind) {
    if (!is_nash(net, kind))
        throw ValidationError("audit_ne: network is not a Nash equilibrium of the " +
                              game_kind_name(kind) + " game");
    const int k = net.budget();
    NeAuditReport report;
    report.kind = kind;
    report.budget_full = true;
    for (int v = 0; v < net.n(); ++v)
        if (net.strategy_of(v).total_capacity() != k) report.budget_full = false;
    report.lambda = global_connectivity(net);
    report.connected = report.lambda >= 1;
    report.cluster = find_cluster(net, k + 1);
    report.required_lambda = kind == GameKind::MinFlow ? k + 1 : (k >= 2 ? k : 1);
    report.lambda_ok = report.lambda >= report.required_lambda;
    return report;
}

} // namespace flowncg
