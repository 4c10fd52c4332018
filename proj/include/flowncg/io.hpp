#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowncg/analysis.hpp"
#include "flowncg/dynamics.hpp"
#include "flowncg/games.hpp"
#include "flowncg/network.hpp"

namespace flowncg {

// Network file format:
//   { "n": int, "k": int, "edges": [ {"owner": int, "target": int,
//     "capacity": int} ] }
// plus an optional "names" object mapping node names to ids. Export is
// canonical: edges sorted by (owner, target), keys alphabetical, two-space
// indent, trailing newline; re-importing an export reproduces it byte for
// byte.
nlohmann::json network_to_json(const CapacityNetwork &net);
CapacityNetwork network_from_json(const nlohmann::json &j);
std::string network_to_string(const CapacityNetwork &net);
CapacityNetwork network_from_string(const std::string &text);

// Graphviz export: one arrow per owned edge, labeled with its capacity;
// node labels use the name metadata when present.
std::string network_to_dot(const CapacityNetwork &net);

// Utilities serialize per game: the average game as an exact fraction
// string ("10/3"), the minimum game as the two-integer array [u1, u2].
nlohmann::json utility_to_json(const UtilityValue &u);
UtilityValue utility_from_json(const nlohmann::json &j, GameKind kind);

// A strategy is the array of its purchases: [{"capacity": int,
// "target": int}], sorted by target.
nlohmann::json strategy_to_json(const Strategy &s);
Strategy strategy_from_json(const nlohmann::json &j);

nlohmann::json move_to_json(const MoveRecord &move);
MoveRecord move_from_json(const nlohmann::json &j, GameKind kind);

// A dynamics trace: everything needed to replay the run plus its recorded
// moves and outcome.
struct TraceDocument {
    GameKind kind = GameKind::AvgFlow;
    SchedulerKind scheduler = SchedulerKind::RoundRobin;
    long long step_limit = 0;
    std::uint64_t seed = 0;
    StrategyProfile start;
    std::map<std::string, int> start_names;
    DynamicsStatus status = DynamicsStatus::ReachedNE;
    std::optional<long long> revisit_first_index;
    std::vector<MoveRecord> moves;
};

TraceDocument make_trace(const CapacityNetwork &start, GameKind kind,
                         SchedulerKind scheduler, long long step_limit,
                         std::uint64_t seed, const DynamicsResult &result);
nlohmann::json trace_to_json(const TraceDocument &doc);
TraceDocument trace_from_json(const nlohmann::json &j);

// Replays the trace with the recorded start, scheduler and seed and checks
// the recorded moves and outcome match exactly. Throws ValidationError
// naming the first mismatch.
void verify_trace(const TraceDocument &doc);

nlohmann::json cycle_to_json(const ImprovingCycle &cycle, GameKind kind);
ImprovingCycle cycle_from_json(const nlohmann::json &j, GameKind kind);
nlohmann::json irc_result_to_json(const IrcSearchResult &result, GameKind kind);

// Census artifacts. The JSON report carries every count and ratio as exact
// values plus each equilibrium's edges; the CSV is one row per census.
nlohmann::json census_to_json(const NeCensus &census, const ProfileSpace &space);
std::string census_csv_header();
std::string census_to_csv_row(const NeCensus &census);

nlohmann::json audit_to_json(const NeAuditReport &report);

nlohmann::json evaluation_to_json(const CapacityNetwork &net, GameKind kind);

} // namespace flowncg
