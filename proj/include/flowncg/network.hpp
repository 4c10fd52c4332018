#pragma once

#include <map>
#include <string>
#include <vector>

#include "flowncg/strategy.hpp"

namespace flowncg {

struct DirectedEdge {
    int owner;
    int target;
    int capacity;

    bool operator==(const DirectedEdge &o) const = default;
};

// The capacitated network induced by a strategy profile. Holds the directed
// owner view and the symmetric flow view side by side:
//   directed(v,x)   = capacity bought by v towards x
//   undirected(v,x) = directed(v,x) + directed(x,v)
// All flow and cut computations run on the undirected view. Immutable after
// construction; strategy changes produce a new network (value semantics).
class CapacityNetwork {
  public:
    // Validates the profile and builds both views. Throws ValidationError
    // naming the offending agent on an infeasible profile.
    static CapacityNetwork build(StrategyProfile profile);

    int n() const { return profile_.n; }
    int budget() const { return profile_.k; }
    const StrategyProfile &profile() const { return profile_; }
    const Strategy &strategy_of(int v) const { return profile_.strategies.at(v); }

    int directed_capacity(int owner, int target) const { return directed_[owner * n() + target]; }
    int undirected_capacity(int u, int v) const { return undirected_[u * n() + v]; }
    const std::vector<int> &undirected_matrix() const { return undirected_; }

    // Sum of the capacities of all incoming and outgoing edges at v.
    int degree(int v) const;

    long long total_directed_capacity() const;

    // Directed edges with positive capacity, sorted by (owner, target).
    std::vector<DirectedEdge> edges() const;

    // The network of (s'_v, s_{-v}): same profile with v's strategy replaced.
    // Throws ValidationError if the new strategy is infeasible for v.
    CapacityNetwork with_strategy(int v, Strategy replacement) const;

    // Optional node-name metadata attached by the named constructions
    // (e.g. "z" -> 3 for the four-node example network). Carried through
    // JSON export/import; empty for anonymous networks.
    const std::map<std::string, int> &names() const { return names_; }
    void set_names(std::map<std::string, int> names) { names_ = std::move(names); }

    bool operator==(const CapacityNetwork &o) const {
        return profile_ == o.profile_;
    }

  private:
    explicit CapacityNetwork(StrategyProfile profile);

    StrategyProfile profile_;
    std::vector<int> directed_;   // n*n, row = owner
    std::vector<int> undirected_; // n*n symmetric
    std::map<std::string, int> names_;
};

inline CapacityNetwork build_network(StrategyProfile profile) {
    return CapacityNetwork::build(std::move(profile));
}

inline CapacityNetwork apply_strategy(const CapacityNetwork &net, int v, Strategy replacement) {
    return net.with_strategy(v, std::move(replacement));
}

} // namespace flowncg
