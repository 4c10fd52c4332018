#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flowncg/games.hpp"
#include "flowncg/network.hpp"

namespace flowncg {

// Every feasible strategy for `owner`: all capacity assignments to the other
// n-1 nodes with total in 0..k, ordered by ascending capacity vector over
// targets in ascending order. The empty strategy comes first.
std::vector<Strategy> enumerate_strategies(int n, int k, int owner);

// Closed-form size of enumerate_strategies(n, k, _): sum over t=0..k of the
// number of weak compositions of t into n-1 parts.
unsigned long long strategy_space_size(int n, int k);

struct BestResponse {
    Strategy strategy;
    UtilityValue utility;
    UtilityValue current_utility;
    bool improved = false;
};

// Utility-maximal strategy for v with all other strategies fixed. Returns
// the current strategy whenever it attains the maximum (equilibria are fixed
// points); otherwise the smallest maximizer under Strategy ordering.
BestResponse best_response(const CapacityNetwork &net, int v, GameKind kind);

struct MoveRecord {
    int agent = -1;
    Strategy before;
    Strategy after;
    UtilityValue utility_before;
    UtilityValue utility_after;
};

// First improving move in agent order, as a best response; empty when the
// network is a Nash equilibrium.
std::optional<MoveRecord> find_improving_move(const CapacityNetwork &net, GameKind kind);

bool is_nash(const CapacityNetwork &net, GameKind kind);

enum class SchedulerKind { RoundRobin, RandomPermutation, FirstImproving };

std::string scheduler_name(SchedulerKind kind);
SchedulerKind parse_scheduler(const std::string &name);

enum class DynamicsStatus { ReachedNE, RevisitedState, StepLimit };

std::string dynamics_status_name(DynamicsStatus status);

struct DynamicsResult {
    DynamicsStatus status = DynamicsStatus::ReachedNE;
    std::vector<MoveRecord> moves;
    StrategyProfile final_profile;
    // Set when status is RevisitedState: index of the earlier occurrence in
    // the state sequence (state 0 is the start, state i follows move i).
    std::optional<long long> revisit_first_index;
};

// Sequential best-response dynamics. Each activation computes the agent's
// best response and applies it when strictly improving. Stops on a Nash
// equilibrium (every agent confirmed unable to improve since the last
// change), on an exact repeat of a previously seen labeled network, or when
// the applied-move count would exceed step_limit. Reproducible from
// (start, kind, scheduler, seed).
DynamicsResult run_dynamics(const CapacityNetwork &start, GameKind kind,
                            SchedulerKind scheduler, long long step_limit,
                            std::uint64_t seed);

// A cycle in the improving-move graph: applying the moves in order to the
// start profile visits strictly improving states and returns to the exact
// labeled start.
struct ImprovingCycle {
    StrategyProfile start;
    std::vector<MoveRecord> moves;
};

enum class IrcStatus { CycleFound, NoneExhaustive, Inconclusive };

std::string irc_status_name(IrcStatus status);

struct IrcSearchResult {
    IrcStatus status = IrcStatus::Inconclusive;
    std::optional<ImprovingCycle> cycle;
    long long states_explored = 0;
    int n = 0;
    int k = 0;
};

// Exhaustive depth-first exploration of the improving-move graph over all
// labeled feasible networks on (n, k). Considers every improving move, not
// just best responses. Returns the first cycle encountered in deterministic
// order; NoneExhaustive when the whole graph was explored acyclically;
// Inconclusive when state_budget distinct states were colored first.
IrcSearchResult search_irc(int n, int k, GameKind kind, long long state_budget);

// Replays a cycle, checking feasibility, strict improvement of every move,
// and exact labeled closure. Throws ValidationError on any violation.
void verify_cycle(const ImprovingCycle &cycle, GameKind kind);

} // namespace flowncg
