#pragma once

#include <optional>
#include <vector>

#include "flowncg/games.hpp"
#include "flowncg/network.hpp"

namespace flowncg {

// Refusal raised when an exhaustive sweep would exceed its evaluation
// budget; carries the computed profile count.
class BudgetExceeded : public ValidationError {
  public:
    BudgetExceeded(unsigned long long count, unsigned long long budget)
        : ValidationError("profile space holds " + std::to_string(count) +
                          " profiles, above the evaluation budget of " +
                          std::to_string(budget)),
          count(count), budget(budget) {}

    unsigned long long count;
    unsigned long long budget;
};

inline constexpr unsigned long long kDefaultProfileBudget = 100000000ull;

// The space of all strategy profiles on (n, k), indexable in mixed radix:
// profile index digit v selects agent v's strategy, agent 0 most
// significant. Enumeration order is ascending index.
class ProfileSpace {
  public:
    // Throws BudgetExceeded when per_agent_count^n exceeds the budget.
    ProfileSpace(int n, int k, unsigned long long budget = kDefaultProfileBudget);

    int n() const { return n_; }
    int k() const { return k_; }
    unsigned long long profile_count() const { return count_; }
    unsigned long long per_agent_count() const { return per_agent_strat_[0].size(); }
    const std::vector<Strategy> &strategies_of(int agent) const { return per_agent_strat_[agent]; }

    StrategyProfile profile_at(unsigned long long index) const;

  private:
    int n_;
    int k_;
    unsigned long long count_;
    std::vector<std::vector<Strategy>> per_agent_strat_;
};

// Census of all Nash equilibria on (n, k) for one game: counts, extremal
// social utilities, the optimum over all profiles, and the resulting
// empirical price of anarchy and stability.
struct NeCensus {
    int n = 0;
    int k = 0;
    GameKind kind = GameKind::AvgFlow;
    unsigned long long profile_count = 0;
    unsigned long long ne_labeled_count = 0;
    unsigned long long ne_iso_count = 0;
    std::optional<Rational> min_ne_social;
    std::optional<Rational> max_ne_social;
    Rational opt_social;
    std::optional<Rational> poa; // opt / min NE social
    std::optional<Rational> pos; // opt / max NE social
    // Labeled equilibria in enumeration order, as profile indices into the
    // ProfileSpace plus their social utilities.
    std::vector<unsigned long long> ne_indices;
    std::vector<Rational> ne_socials;
};

// Exhaustive sweep over every profile: is_nash filter, extremal social
// utilities among equilibria, optimum over all profiles. Deterministic and
// byte-stable for any thread count. Throws BudgetExceeded as ProfileSpace.
NeCensus ne_census(int n, int k, GameKind kind, int threads = 1,
                   unsigned long long budget = kDefaultProfileBudget);

// Searches for a j-cluster: iteratively removes cuts of capacity below j
// from the undirected view, then returns the first surviving component
// (by smallest node id) of size >= 2 whose induced subgraph has edge
// connectivity >= j.
std::optional<std::vector<int>> find_cluster(const CapacityNetwork &net, int j);

// Structural audit of an equilibrium network against the gameplay
// guarantees: full budget use, connectivity, (k+1)-cluster presence, and
// the game-specific edge-connectivity lower bound.
struct NeAuditReport {
    GameKind kind = GameKind::AvgFlow;
    bool budget_full = false;
    bool connected = false;
    std::optional<std::vector<int>> cluster; // a (k+1)-cluster if present
    long long lambda = 0;                    // edge connectivity of the network
    long long required_lambda = 0;           // game-specific lower bound
    bool lambda_ok = false;

    bool all_pass() const {
        return budget_full && connected && cluster.has_value() && lambda_ok;
    }
};

// Throws ValidationError when the network is not a Nash equilibrium of the
// given game.
NeAuditReport audit_ne(const CapacityNetwork &net, GameKind kind);

} // namespace flowncg
