#include "flowncg/network.hpp"

namespace flowncg {

CapacityNetwork::CapacityNetwork(StrategyProfile profile)
    : profile_(std::move(profile)),
      directed_(profile_.n * profile_.n, 0),
      undirected_(profile_.n * profile_.n, 0) {
    const int n = profile_.n;
    for (int v = 0; v < n; ++v)
        for (const auto &p : profile_.strategies[v].purchases)
            directed_[v * n + p.target] = p.capacity;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            undirected_[u * n + v] = directed_[u * n + v] + directed_[v * n + u];
}

CapacityNetwork CapacityNetwork::build(StrategyProfile profile) {
    validate_profile(profile);
    return CapacityNetwork(std::move(profile));
}

int CapacityNetwork::degree(int v) const {
    if (v < 0 || v >= n()) throw std::invalid_argument("degree: node out of range");
    int sum = 0;
    for (int u = 0; u < n(); ++u) sum += undirected_[v * n() + u];
    return sum;
}

long long CapacityNetwork::total_directed_capacity() const {
    long long sum = 0;
    for (int c : directed_) sum += c;
    return sum;
}

std::vector<DirectedEdge> CapacityNetwork::edges() const {
    std::vector<DirectedEdge> out;
    for (int owner = 0; owner < n(); ++owner)
        for (int target = 0; target < n(); ++target)
            if (int c = directed_[owner * n() + target]; c > 0)
                out.push_back({owner, target, c});
    return out;
}

CapacityNetwork CapacityNetwork::with_strategy(int v, Strategy replacement) const {
    if (v < 0 || v >= n()) throw std::invalid_argument("with_strategy: node out of range");
    validate_strategy(replacement, v, n(), budget());
    StrategyProfile next = profile_;
    next.strategies[v] = std::move(replacement);
    CapacityNetwork result(std::move(next));
    result.names_ = names_;
    return result;
}

} // namespace flowncg
