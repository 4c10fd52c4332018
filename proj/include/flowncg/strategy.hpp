#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flowncg {

// Raised when a strategy or profile violates the game's feasibility rules.
// Messages always name the offending agent or field.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string &what) : std::runtime_error(what) {}
};

// A purchase of one directed edge: target node plus the bought capacity.
struct Purchase {
    int target;
    int capacity;

    bool operator==(const Purchase &o) const = default;
    auto operator<=>(const Purchase &o) const = default;
};

// One agent's strategy: the set of edges it buys, keyed by target.
// Kept sorted by target with strictly positive capacities, so a node the
// agent does not connect to simply has no entry.
struct Strategy {
    std::vector<Purchase> purchases;

    Strategy() = default;
    Strategy(std::initializer_list<Purchase> list) : purchases(list) { sort_purchases(); }
    explicit Strategy(std::vector<Purchase> list) : purchases(std::move(list)) { sort_purchases(); }

    // Total capacity bought; must not exceed the budget k.
    int total_capacity() const {
        int sum = 0;
        for (const auto &p : purchases) sum += p.capacity;
        return sum;
    }

    int capacity_to(int target) const {
        for (const auto &p : purchases)
            if (p.target == target) return p.capacity;
        return 0;
    }

    bool empty() const { return purchases.empty(); }

    // Removes the purchase towards `target` if present.
    void erase_target(int target);
    // Adds `amount` to the capacity towards `target`, creating the purchase
    // if absent.
    void add_capacity(int target, int amount);

    void sort_purchases();

    bool operator==(const Strategy &o) const = default;
    // Lexicographic order on the sorted (target, capacity) list; used as the
    // deterministic tie-break between equally good strategies.
    auto operator<=>(const Strategy &o) const = default;
};

// One strategy per agent plus the shared budget. Agents are the nodes
// 0..n-1; the profile is the complete game state.
struct StrategyProfile {
    int n = 0;
    int k = 0;
    std::vector<Strategy> strategies;

    StrategyProfile() = default;
    StrategyProfile(int n_, int k_) : n(n_), k(k_), strategies(n_) {}
    StrategyProfile(int n_, int k_, std::vector<Strategy> s)
        : n(n_), k(k_), strategies(std::move(s)) {}

    bool operator==(const StrategyProfile &o) const = default;
};

// Throws ValidationError naming the agent on any violation: out-of-range or
// duplicate target, self-loop, non-positive capacity, or budget excess.
void validate_strategy(const Strategy &s, int owner, int n, int k);

// Validates n, k (1 <= k < n) and every agent's strategy.
void validate_profile(const StrategyProfile &profile);

std::string strategy_to_string(const Strategy &s);

} // namespace flowncg
