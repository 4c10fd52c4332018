#include "flowncg/maxflow.hpp"

#include <limits>
#include <stdexcept>

namespace flowncg {

namespace {

// BFS over the residual matrix; fills parent[] and returns true if t was
// reached. queue/parent are caller-provided scratch to avoid allocation in
// the augmenting loop.
bool residual_bfs(const std::vector<long long> &residual, int n, int s, int t,
                  std::vector<int> &parent, std::vector<int> &queue) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
        int u = queue[head++];
        const long long *row = residual.data() + (size_t)u * n;
        for (int v = 0; v < n; ++v) {
            if (parent[v] == -1 && row[v] > 0) {
                parent[v] = u;
                if (v == t) return true;
                queue[tail++] = v;
            }
        }
    }
    return false;
}

long long run_max_flow(const std::vector<int> &capacity, int n, int s, int t,
                       std::vector<long long> &residual) {
    if (n < 2) throw std::invalid_argument("max_flow: need at least two nodes");
    if (s < 0 || s >= n || t < 0 || t >= n) throw std::invalid_argument("max_flow: node out of range");
    if (s == t) throw std::invalid_argument("max_flow: source equals sink");
    if ((int)capacity.size() != n * n)
        throw std::invalid_argument("max_flow: capacity matrix size mismatch");

    residual.assign(capacity.begin(), capacity.end());
    std::vector<int> parent(n), queue(n);
    long long flow = 0;
    while (residual_bfs(residual, n, s, t, parent, queue)) {
        long long bottleneck = std::numeric_limits<long long>::max();
        for (int v = t; v != s; v = parent[v]) {
            long long r = residual[(size_t)parent[v] * n + v];
            if (r < bottleneck) bottleneck = r;
        }
        for (int v = t; v != s; v = parent[v]) {
            residual[(size_t)parent[v] * n + v] -= bottleneck;
            residual[(size_t)v * n + parent[v]] += bottleneck;
        }
        flow += bottleneck;
    }
    return flow;
}

} // namespace

long long max_flow_undirected(const std::vector<int> &capacity, int n, int s, int t) {
    std::vector<long long> residual;
    return run_max_flow(capacity, n, s, t, residual);
}

long long max_flow_with_cut(const std::vector<int> &capacity, int n, int s, int t,
                            std::vector<char> &source_side) {
    std::vector<long long> residual;
    long long flow = run_max_flow(capacity, n, s, t, residual);
    source_side.assign(n, 0);
    std::vector<int> stack{s};
    source_side[s] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (!source_side[v] && residual[(size_t)u * n + v] > 0) {
                source_side[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return flow;
}

} // namespace flowncg
