#pragma once

#include <vector>

namespace flowncg {

// Exact maximum flow between s and t over a symmetric capacity matrix
// (n*n, row-major). Each undirected edge of capacity c is treated as two
// opposed directed arcs of capacity c, so the residual matrix starts out
// equal to the input matrix. BFS augmenting paths; integer arithmetic only.
long long max_flow_undirected(const std::vector<int> &capacity, int n, int s, int t);

// Runs the same computation and additionally reports the s-side of a
// minimum cut: the set of nodes reachable from s in the final residual
// network, as a membership vector of size n.
long long max_flow_with_cut(const std::vector<int> &capacity, int n, int s, int t,
                            std::vector<char> &source_side);

} // namespace flowncg
