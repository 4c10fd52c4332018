#pragma once

#include <utility>
#include <vector>

#include "flowncg/network.hpp"

namespace flowncg {

// Compact all-pairs local-edge-connectivity structure: a spanning tree on
// 0..n-1 where the minimum edge value on the path between u and v equals
// the u-v max-flow value in the underlying network. Built with n-1
// max-flow calls (Gusfield's variant, which never contracts the graph).
struct GomoryHuTree {
    int n = 0;
    std::vector<int> parent;       // parent[0] == -1, tree edge (i, parent[i]) for i >= 1
    std::vector<long long> weight; // weight[i] = cut value of that tree edge

    // Minimum edge value on the tree path between u and v.
    long long query(int u, int v) const;
};

// Flattened all-pairs connectivity values plus the global minimum, the form
// the game-utility code consumes.
struct AllPairsConnectivity {
    int n = 0;
    std::vector<long long> lambda; // n*n, lambda[u*n+v]; diagonal unused (0)
    long long global = 0;          // min over all pairs; 0 iff disconnected

    long long at(int u, int v) const { return lambda[(size_t)u * n + v]; }
};

// Exact u-v max-flow value in the undirected view (the local edge
// connectivity); 0 iff u and v lie in different connected components.
// Throws std::invalid_argument when u == v or out of range.
long long local_connectivity(const CapacityNetwork &net, int u, int v);

// Gusfield tree over the network's undirected view; n >= 2.
GomoryHuTree all_pairs_connectivity(const CapacityNetwork &net);

// Same, over a bare symmetric capacity matrix. Used internally and by the
// cluster search, which runs on induced submatrices.
GomoryHuTree gomory_hu_from_matrix(const std::vector<int> &capacity, int n);

// Expands a tree to the n*n value matrix plus the global minimum.
AllPairsConnectivity expand_all_pairs(const GomoryHuTree &tree);

inline AllPairsConnectivity all_pairs_matrix(const CapacityNetwork &net) {
    return expand_all_pairs(all_pairs_connectivity(net));
}

// Minimum over all pairs of local_connectivity; 0 iff disconnected; n >= 2.
long long global_connectivity(const CapacityNetwork &net);

// A bipartition (V1, V2) of all nodes whose crossing undirected capacity
// equals global_connectivity(net). Node 0 is always in V1; both sides are
// sorted ascending. n >= 2.
std::pair<std::vector<int>, std::vector<int>> min_cut_partition(const CapacityNetwork &net);

// Total undirected capacity crossing the given bipartition (side[v] != 0
// puts v in V1).
long long crossing_capacity(const std::vector<int> &capacity, int n, const std::vector<char> &side);

} // namespace flowncg
