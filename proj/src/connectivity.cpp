#include "flowncg/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "flowncg/maxflow.hpp"

namespace flowncg {

long long GomoryHuTree::query(int u, int v) const {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("gomory-hu: node out of range");
    if (u == v) throw std::invalid_argument("gomory-hu: query needs distinct nodes");
    // Walk both nodes up to the root, tracking the minimum edge value on
    // the joining path. depth via parent chain; n is small.
    std::vector<int> depth(n, 0);
    for (int i = 0; i < n; ++i) {
        int d = 0;
        for (int x = i; parent[x] != -1; x = parent[x]) ++d;
        depth[i] = d;
    }
    long long best = std::numeric_limits<long long>::max();
    int a = u, b = v;
    while (depth[a] > depth[b]) {
        best = std::min(best, weight[a]);
        a = parent[a];
    }
    while (depth[b] > depth[a]) {
        best = std::min(best, weight[b]);
        b = parent[b];
    }
    while (a != b) {
        best = std::min(best, std::min(weight[a], weight[b]));
        a = parent[a];
        b = parent[b];
    }
    return best;
}

long long local_connectivity(const CapacityNetwork &net, int u, int v) {
    if (u == v) throw std::invalid_argument("local_connectivity: u and v must differ");
    return max_flow_undirected(net.undirected_matrix(), net.n(), u, v);
}

GomoryHuTree gomory_hu_from_matrix(const std::vector<int> &capacity, int n) {
    if (n < 2) throw std::invalid_argument("gomory-hu: need at least two nodes");
    GomoryHuTree tree;
    tree.n = n;
    tree.parent.assign(n, 0);
    tree.parent[0] = -1;
    tree.weight.assign(n, 0);
    std::vector<char> side;
    for (int i = 1; i < n; ++i) {
        int t = tree.parent[i];
        tree.weight[i] = max_flow_with_cut(capacity, n, i, t, side);
        // Reparent later nodes that fell on i's side of the cut.
        for (int j = i + 1; j < n; ++j)
            if (tree.parent[j] == t && side[j]) tree.parent[j] = i;
    }
    return tree;
}

GomoryHuTree all_pairs_connectivity(const CapacityNetwork &net) {
    return gomory_hu_from_matrix(net.undirected_matrix(), net.n());
}

AllPairsConnectivity expand_all_pairs(const GomoryHuTree &tree) {
    const int n = tree.n;
    AllPairsConnectivity out;
    out.n = n;
    out.lambda.assign((size_t)n * n, 0);

    std::vector<std::vector<std::pair<int, long long>>> adj(n);
    for (int i = 1; i < n; ++i) {
        adj[i].push_back({tree.parent[i], tree.weight[i]});
        adj[tree.parent[i]].push_back({i, tree.weight[i]});
    }
    // From each root, a DFS carrying the running path minimum fills one row.
    std::vector<int> stack;
    std::vector<char> seen(n);
    for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        seen[r] = 1;
        stack.assign(1, r);
        std::vector<long long> best(n, std::numeric_limits<long long>::max());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, w] : adj[u]) {
                if (seen[v]) continue;
                seen[v] = 1;
                best[v] = std::min(best[u], w);
                out.lambda[(size_t)r * n + v] = best[v];
                stack.push_back(v);
            }
        }
    }
    out.global = std::numeric_limits<long long>::max();
    for (int i = 1; i < n; ++i) out.global = std::min(out.global, tree.weight[i]);
    return out;
}

long long global_connectivity(const CapacityNetwork &net) {
    GomoryHuTree tree = all_pairs_connectivity(net);
    long long best = std::numeric_limits<long long>::max();
    for (int i = 1; i < net.n(); ++i) best = std::min(best, tree.weight[i]);
    return best;
}

std::pair<std::vector<int>, std::vector<int>> min_cut_partition(const CapacityNetwork &net) {
    GomoryHuTree tree = all_pairs_connectivity(net);
    int arg = 1;
    for (int i = 2; i < net.n(); ++i)
        if (tree.weight[i] < tree.weight[arg]) arg = i;
    // Recompute the max-flow for the minimizing tree edge to recover an
    // actual bipartition achieving the global minimum.
    std::vector<char> side;
    max_flow_with_cut(net.undirected_matrix(), net.n(), arg, tree.parent[arg], side);
    std::vector<int> v1, v2;
    for (int v = 0; v < net.n(); ++v) (side[v] ? v1 : v2).push_back(v);
    if (!side[0]) std::swap(v1, v2); // normalize: node 0 in V1
    return {v1, v2};
}

long long crossing_capacity(const std::vector<int> &capacity, int n, const std::vector<char> &side) {
    long long sum = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (side[u] != side[v]) sum += capacity[(size_t)u * n + v];
    return sum;
}

} // namespace flowncg
