#pragma once

#include <string>

#include "flowncg/connectivity.hpp"
#include "flowncg/network.hpp"
#include "flowncg/rational.hpp"

namespace flowncg {

// The two game variants. In the average game an agent maximizes its mean
// flow value to every other node; in the minimum game it maximizes the
// pair (network edge connectivity, number of well-connected nodes)
// lexicographically.
enum class GameKind { AvgFlow, MinFlow };

std::string game_kind_name(GameKind kind);
GameKind parse_game_kind(const std::string &name);

// An agent's utility under one of the two games. AvgFlow carries an exact
// rational; MinFlow carries the lexicographic pair (u1, u2) where u1 is the
// edge connectivity of the whole network and u2 counts the nodes whose
// connectivity to the agent strictly exceeds u1.
struct UtilityValue {
    GameKind kind;
    Rational avg;      // AvgFlow only
    long long u1 = 0;  // MinFlow only
    long long u2 = 0;  // MinFlow only

    static UtilityValue average(Rational value) { return {GameKind::AvgFlow, value, 0, 0}; }
    static UtilityValue minimum(long long u1, long long u2) {
        return {GameKind::MinFlow, Rational(), u1, u2};
    }

    std::string str() const;
};

// Three-way comparison; total order within a kind. Throws
// std::invalid_argument when the kinds differ.
int compare(const UtilityValue &a, const UtilityValue &b);

inline bool better(const UtilityValue &a, const UtilityValue &b) { return compare(a, b) > 0; }

// Utility of agent v in the given game. AvgFlow: sum of v's local
// connectivities divided by n-1. MinFlow: (edge connectivity, count of
// well-connected nodes towards v).
UtilityValue agent_utility(const CapacityNetwork &net, int v, GameKind kind);

// Same, reusing a precomputed all-pairs connectivity matrix for the
// network. The matrix must belong to the same network.
UtilityValue agent_utility_from(const AllPairsConnectivity &conn, int v, GameKind kind);

// AvgFlow: mean agent utility. MinFlow: the edge connectivity, as a
// rational for uniform reporting.
Rational social_utility(const CapacityNetwork &net, GameKind kind);
Rational social_utility_from(const AllPairsConnectivity &conn, GameKind kind);

} // namespace flowncg
