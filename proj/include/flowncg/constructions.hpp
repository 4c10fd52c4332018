#pragma once

#include <string>

#include "flowncg/network.hpp"

namespace flowncg {

// How the optimal-network builder picks its Hamiltonian cycles. Distinct
// rotation offsets coprime to n give k different cycles when enough exist;
// repeating the canonical cycle instead yields the plain directed cycle
// with capacity-k edges. Both attain the optimum.
enum class CyclePolicy { DistinctOffsets, RepeatCanonical };

CyclePolicy parse_cycle_policy(const std::string &name);

// Union of k directed Hamiltonian cycles with unit capacity increments.
// Every node ends up with outgoing capacity exactly k; the social utility
// is 2k in both games. Requires n >= 3 and 1 <= k < n.
CapacityNetwork build_opt(int n, int k, CyclePolicy policy = CyclePolicy::DistinctOffsets);

// Node i owns one capacity-k edge to node (i+1) mod n. A Nash equilibrium
// in both games with social utility 2k. Requires n >= 3 and 1 <= k < n.
CapacityNetwork build_directed_cycle(int n, int k);

// Chain construction whose edge connectivity is exactly k+1: a worst-case
// equilibrium of the minimum game. Not an equilibrium of the average game;
// see min_game_worst_ne_witness. Requires 1 <= k < n.
CapacityNetwork build_min_game_worst_ne(int n, int k);

// The strategy change that shows the chain network is not an equilibrium
// of the average game: agent v2 drops its edge to v1 and raises the
// capacity towards vn by one. Returned as (agent id, replacement strategy).
std::pair<int, Strategy> min_game_worst_ne_witness(int n, int k);

// k nodes in a circle, each owning one capacity-k edge to the next; every
// remaining node owns a unit edge to each circle node. An equilibrium of
// the average game with social utility k + k(k-1)/(n-1); not an
// equilibrium of the minimum game. Requires 2 <= k < n.
CapacityNetwork build_avg_game_circle_ne(int n, int k);

// Star-like average-game equilibrium with social utility exactly k+1:
// center c, spoke nodes a_1..a_{k-1} buying capacity-k edges to c, and a
// chain b_1..b_{n-k} attached to c. Requires 1 <= k < n and n >= k+2.
CapacityNetwork build_avg_game_star_ne(int n, int k);

// The fixed four-node, budget-2 example network with nodes v, x, y, z.
CapacityNetwork build_figure1();

} // namespace flowncg
