#include "flowncg/strategy.hpp"

#include <algorithm>

namespace flowncg {

void Strategy::sort_purchases() {
    std::sort(purchases.begin(), purchases.end(),
              [](const Purchase &a, const Purchase &b) { return a.target < b.target; });
}

void Strategy::erase_target(int target) {
    purchases.erase(std::remove_if(purchases.begin(), purchases.end(),
                                   [target](const Purchase &p) { return p.target == target; }),
                    purchases.end());
}

void Strategy::add_capacity(int target, int amount) {
    for (auto &p : purchases) {
        if (p.target == target) {
            p.capacity += amount;
            return;
        }
    }
    purchases.push_back({target, amount});
    sort_purchases();
}

void validate_strategy(const Strategy &s, int owner, int n, int k) {
    int total = 0;
    int prev_target = -1;
    for (const auto &p : s.purchases) {
        if (p.target < 0 || p.target >= n)
            throw ValidationError("agent " + std::to_string(owner) + ": target " +
                                  std::to_string(p.target) + " out of range [0," +
                                  std::to_string(n - 1) + "]");
        if (p.target == owner)
            throw ValidationError("agent " + std::to_string(owner) + ": self-loop not allowed");
        if (p.target <= prev_target)
            throw ValidationError("agent " + std::to_string(owner) + ": duplicate target " +
                                  std::to_string(p.target));
        if (p.capacity < 1)
            throw ValidationError("agent " + std::to_string(owner) + ": capacity towards " +
                                  std::to_string(p.target) + " must be >= 1");
        prev_target = p.target;
        total += p.capacity;
    }
    if (total > k)
        throw ValidationError("agent " + std::to_string(owner) + ": total capacity " +
                              std::to_string(total) + " exceeds budget " + std::to_string(k));
}

void validate_profile(const StrategyProfile &profile) {
    if (profile.n < 2) throw ValidationError("profile: n must be >= 2");
    if (profile.k < 1 || profile.k >= profile.n)
        throw ValidationError("profile: budget k must satisfy 1 <= k < n");
    if ((int)profile.strategies.size() != profile.n)
        throw ValidationError("profile: expected " + std::to_string(profile.n) +
                              " strategies, got " + std::to_string(profile.strategies.size()));
    for (int v = 0; v < profile.n; ++v)
        validate_strategy(profile.strategies[v], v, profile.n, profile.k);
}

std::string strategy_to_string(const Strategy &s) {
    std::string out = "{";
    for (size_t i = 0; i < s.purchases.size(); ++i) {
        if (i) out += ", ";
        out += "(" + std::to_string(s.purchases[i].target) + "," +
               std::to_string(s.purchases[i].capacity) + ")";
    }
    out += "}";
    return out;
}

} // namespace flowncg
