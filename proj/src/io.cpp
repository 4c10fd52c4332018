#include "flowncg/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "flowncg/connectivity.hpp"

namespace flowncg {

namespace {

using nlohmann::json;

const json &require_field(const json &j, const char *field, const char *where) {
    auto it = j.find(field);
    if (it == j.end())
        throw ValidationError(std::string(where) + ": missing field \"" + field + "\"");
    return *it;
}

long long require_int(const json &j, const char *field, const char *where) {
    const json &v = require_field(j, field, where);
    if (!v.is_number_integer())
        throw ValidationError(std::string(where) + ": field \"" + field +
                              "\" must be an integer");
    return v.get<long long>();
}

void require_known_keys(const json &j, std::initializer_list<const char *> known,
                        const char *where) {
    if (!j.is_object())
        throw ValidationError(std::string(where) + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char *key : known)
            if (it.key() == key) ok = true;
        if (!ok)
            throw ValidationError(std::string(where) + ": unknown field \"" + it.key() +
                                  "\"");
    }
}

} // namespace

json network_to_json(const CapacityNetwork &net) {
    json j;
    j["n"] = net.n();
    j["k"] = net.budget();
    j["edges"] = json::array();
    for (const DirectedEdge &e : net.edges()) {
        json edge;
        edge["owner"] = e.owner;
        edge["target"] = e.target;
        edge["capacity"] = e.capacity;
        j["edges"].push_back(std::move(edge));
    }
    if (!net.names().empty()) {
        json names;
        for (const auto &[name, id] : net.names()) names[name] = id;
        j["names"] = std::move(names);
    }
    return j;
}

CapacityNetwork network_from_json(const json &j) {
    require_known_keys(j, {"n", "k", "edges", "names"}, "network");
    const long long n = require_int(j, "n", "network");
    const long long k = require_int(j, "k", "network");
    if (n < 2 || n > 1000)
        throw ValidationError("network: field \"n\" must be in 2..1000, got " +
                              std::to_string(n));
    if (k < 1 || k >= n)
        throw ValidationError("network: field \"k\" must satisfy 1 <= k < n, got " +
                              std::to_string(k));
    const json &edges = require_field(j, "edges", "network");
    if (!edges.is_array())
        throw ValidationError("network: field \"edges\" must be an array");

    StrategyProfile profile((int)n, (int)k);
    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "network: edges[" + std::to_string(i) + "]";
        const json &e = edges[i];
        require_known_keys(e, {"owner", "target", "capacity"}, where.c_str());
        const long long owner = require_int(e, "owner", where.c_str());
        const long long target = require_int(e, "target", where.c_str());
        const long long capacity = require_int(e, "capacity", where.c_str());
        if (owner < 0 || owner >= n)
            throw ValidationError(where + ": field \"owner\" out of range");
        if (target < 0 || target >= n)
            throw ValidationError(where + ": field \"target\" out of range");
        if (capacity < 1 || capacity > k)
            throw ValidationError(where + ": field \"capacity\" must be in 1..k");
        if (!seen.insert({(int)owner, (int)target}).second)
            throw ValidationError(where + ": duplicate edge (" + std::to_string(owner) +
                                  ", " + std::to_string(target) + ")");
        profile.strategies[(size_t)owner].add_capacity((int)target, (int)capacity);
    }
    CapacityNetwork net = CapacityNetwork::build(std::move(profile));

    if (j.contains("names")) {
        const json &names = j["names"];
        if (!names.is_object())
            throw ValidationError("network: field \"names\" must be an object");
        std::map<std::string, int> map;
        std::set<int> ids;
        for (auto it = names.begin(); it != names.end(); ++it) {
            if (!it.value().is_number_integer())
                throw ValidationError("network: names[\"" + it.key() +
                                      "\"] must be an integer node id");
            const long long id = it.value().get<long long>();
            if (id < 0 || id >= n)
                throw ValidationError("network: names[\"" + it.key() +
                                      "\"] is out of range");
            if (!ids.insert((int)id).second)
                throw ValidationError("network: names map two names to node " +
                                      std::to_string(id));
            map[it.key()] = (int)id;
        }
        net.set_names(std::move(map));
    }
    return net;
}

std::string network_to_string(const CapacityNetwork &net) {
    return network_to_json(net).dump(2) + "\n";
}

CapacityNetwork network_from_string(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("network: JSON parse error: ") + e.what());
    }
    return network_from_json(j);
}

std::string network_to_dot(const CapacityNetwork &net) {
    std::vector<std::string> label(net.n());
    for (int v = 0; v < net.n(); ++v) label[v] = std::to_string(v);
    for (const auto &[name, id] : net.names()) label[id] = name;
    std::ostringstream out;
    out << "digraph network {\n";
    for (int v = 0; v < net.n(); ++v)
        out << "  n" << v << " [label=\"" << label[v] << "\"];\n";
    for (const DirectedEdge &e : net.edges())
        out << "  n" << e.owner << " -> n" << e.target << " [label=\"" << e.capacity
            << "\"];\n";
    out << "}\n";
    return out.str();
}

json utility_to_json(const UtilityValue &u) {
    if (u.kind == GameKind::AvgFlow) return u.avg.str();
    return json::array({u.u1, u.u2});
}

UtilityValue utility_from_json(const json &j, GameKind kind) {
    if (kind == GameKind::AvgFlow) {
        if (!j.is_string())
            throw ValidationError("utility: expected a fraction string for the avg game");
        return UtilityValue::average(Rational::parse(j.get<std::string>()));
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        throw ValidationError("utility: expected a two-integer array for the min game");
    return UtilityValue::minimum(j[0].get<long long>(), j[1].get<long long>());
}

json strategy_to_json(const Strategy &s) {
    json arr = json::array();
    for (const Purchase &p : s.purchases) {
        json e;
        e["target"] = p.target;
        e["capacity"] = p.capacity;
        arr.push_back(std::move(e));
    }
    return arr;
}

Strategy strategy_from_json(const json &j) {
    if (!j.is_array())
        throw ValidationError("strategy: expected an array of purchases");
    Strategy s;
    for (size_t i = 0; i < j.size(); ++i) {
        const std::string where = "strategy[" + std::to_string(i) + "]";
        require_known_keys(j[i], {"target", "capacity"}, where.c_str());
        const long long target = require_int(j[i], "target", where.c_str());
        const long long capacity = require_int(j[i], "capacity", where.c_str());
        s.purchases.push_back({(int)target, (int)capacity});
    }
    s.sort_purchases();
    return s;
}

json move_to_json(const MoveRecord &move) {
    json j;
    j["agent"] = move.agent;
    j["before"] = strategy_to_json(move.before);
    j["after"] = strategy_to_json(move.after);
    j["utility_before"] = utility_to_json(move.utility_before);
    j["utility_after"] = utility_to_json(move.utility_after);
    return j;
}

MoveRecord move_from_json(const json &j, GameKind kind) {
    require_known_keys(j, {"agent", "before", "after", "utility_before", "utility_after"},
                       "move");
    MoveRecord move;
    move.agent = (int)require_int(j, "agent", "move");
    move.before = strategy_from_json(require_field(j, "before", "move"));
    move.after = strategy_from_json(require_field(j, "after", "move"));
    move.utility_before = utility_from_json(require_field(j, "utility_before", "move"), kind);
    move.utility_after = utility_from_json(require_field(j, "utility_after", "move"), kind);
    return move;
}

TraceDocument make_trace(const CapacityNetwork &start, GameKind kind,
                         SchedulerKind scheduler, long long step_limit,
                         std::uint64_t seed, const DynamicsResult &result) {
    TraceDocument doc;
    doc.kind = kind;
    doc.scheduler = scheduler;
    doc.step_limit = step_limit;
    doc.seed = seed;
    doc.start = start.profile();
    doc.start_names = start.names();
    doc.status = result.status;
    doc.revisit_first_index = result.revisit_first_index;
    doc.moves = result.moves;
    return doc;
}

json trace_to_json(const TraceDocument &doc) {
    json j;
    j["game"] = game_kind_name(doc.kind);
    j["scheduler"] = scheduler_name(doc.scheduler);
    j["step_limit"] = doc.step_limit;
    j["seed"] = doc.seed;
    CapacityNetwork start = CapacityNetwork::build(doc.start);
    start.set_names(doc.start_names);
    j["start"] = network_to_json(start);
    j["outcome"] = dynamics_status_name(doc.status);
    if (doc.revisit_first_index) j["revisit_first_index"] = *doc.revisit_first_index;
    j["moves"] = json::array();
    for (const MoveRecord &m : doc.moves) j["moves"].push_back(move_to_json(m));
    return j;
}

TraceDocument trace_from_json(const json &j) {
    require_known_keys(j,
                       {"game", "scheduler", "step_limit", "seed", "start", "outcome",
                        "revisit_first_index", "moves"},
                       "trace");
    TraceDocument doc;
    const json &game = require_field(j, "game", "trace");
    if (!game.is_string())
        throw ValidationError("trace: field \"game\" must be a string");
    doc.kind = parse_game_kind(game.get<std::string>());
    const json &sched = require_field(j, "scheduler", "trace");
    if (!sched.is_string())
        throw ValidationError("trace: field \"scheduler\" must be a string");
    doc.scheduler = parse_scheduler(sched.get<std::string>());
    doc.step_limit = require_int(j, "step_limit", "trace");
    const json &seed = require_field(j, "seed", "trace");
    if (!seed.is_number_integer() && !seed.is_number_unsigned())
        throw ValidationError("trace: field \"seed\" must be an integer");
    doc.seed = seed.get<std::uint64_t>();
    CapacityNetwork start = network_from_json(require_field(j, "start", "trace"));
    doc.start = start.profile();
    doc.start_names = start.names();
    const json &outcome = require_field(j, "outcome", "trace");
    if (!outcome.is_string())
        throw ValidationError("trace: field \"outcome\" must be a string");
    const std::string oc = outcome.get<std::string>();
    if (oc == "reached-ne")
        doc.status = DynamicsStatus::ReachedNE;
    else if (oc == "revisited-state")
        doc.status = DynamicsStatus::RevisitedState;
    else if (oc == "step-limit")
        doc.status = DynamicsStatus::StepLimit;
    else
        throw ValidationError("trace: unknown outcome \"" + oc + "\"");
    if (j.contains("revisit_first_index"))
        doc.revisit_first_index = require_int(j, "revisit_first_index", "trace");
    const json &moves = require_field(j, "moves", "trace");
    if (!moves.is_array())
        throw ValidationError("trace: field \"moves\" must be an array");
    for (const json &m : moves) doc.moves.push_back(move_from_json(m, doc.kind));
    return doc;
}

void verify_trace(const TraceDocument &doc) {
    CapacityNetwork start = CapacityNetwork::build(doc.start);
    DynamicsResult replay =
        run_dynamics(start, doc.kind, doc.scheduler, doc.step_limit, doc.seed);
    if (replay.status != doc.status)
        throw ValidationError("trace: recorded outcome " + dynamics_status_name(doc.status) +
                              " but replay produced " +
                              dynamics_status_name(replay.status));
    if (replay.revisit_first_index != doc.revisit_first_index)
        throw ValidationError("trace: revisit index differs between record and replay");
    if (replay.moves.size() != doc.moves.size())
        throw ValidationError("trace: recorded " + std::to_string(doc.moves.size()) +
                              " moves but replay produced " +
                              std::to_string(replay.moves.size()));
    for (size_t i = 0; i < doc.moves.size(); ++i) {
        const MoveRecord &a = doc.moves[i];
        const MoveRecord &b = replay.moves[i];
        const std::string where = "trace: move " + std::to_string(i);
        if (a.agent != b.agent)
            throw ValidationError(where + ": agent differs (recorded " +
                                  std::to_string(a.agent) + ", replay " +
                                  std::to_string(b.agent) + ")");
        if (!(a.before == b.before) || !(a.after == b.after))
            throw ValidationError(where + ": strategies differ between record and replay");
        if (compare(a.utility_before, b.utility_before) != 0 ||
            compare(a.utility_after, b.utility_after) != 0)
            throw ValidationError(where + ": utilities differ between record and replay");
    }
}

json cycle_to_json(const ImprovingCycle &cycle, GameKind kind) {
    (void)kind;
    json j;
    j["start"] = network_to_json(CapacityNetwork::build(cycle.start));
    j["moves"] = json::array();
    for (const MoveRecord &m : cycle.moves) j["moves"].push_back(move_to_json(m));
    return j;
}

ImprovingCycle cycle_from_json(const json &j, GameKind kind) {
    require_known_keys(j, {"start", "moves"}, "cycle");
    ImprovingCycle cycle;
    cycle.start = network_from_json(require_field(j, "start", "cycle")).profile();
    const json &moves = require_field(j, "moves", "cycle");
    if (!moves.is_array())
        throw ValidationError("cycle: field \"moves\" must be an array");
    for (const json &m : moves) cycle.moves.push_back(move_from_json(m, kind));
    return cycle;
}

json irc_result_to_json(const IrcSearchResult &result, GameKind kind) {
    json j;
    j["n"] = result.n;
    j["k"] = result.k;
    j["game"] = game_kind_name(kind);
    j["status"] = irc_status_name(result.status);
    j["states_explored"] = result.states_explored;
    j["cycle"] = result.cycle ? cycle_to_json(*result.cycle, kind) : json(nullptr);
    return j;
}

json census_to_json(const NeCensus &census, const ProfileSpace &space) {
    json j;
    j["n"] = census.n;
    j["k"] = census.k;
    j["game"] = game_kind_name(census.kind);
    j["profile_count"] = census.profile_count;
    j["ne_labeled_count"] = census.ne_labeled_count;
    j["ne_iso_count"] = census.ne_iso_count;
    j["min_ne_social"] =
        census.min_ne_social ? json(census.min_ne_social->str()) : json(nullptr);
    j["max_ne_social"] =
        census.max_ne_social ? json(census.max_ne_social->str()) : json(nullptr);
    j["opt_social"] = census.opt_social.str();
    j["poa"] = census.poa ? json(census.poa->str()) : json(nullptr);
    j["pos"] = census.pos ? json(census.pos->str()) : json(nullptr);
    j["ne"] = json::array();
    for (size_t i = 0; i < census.ne_indices.size(); ++i) {
        json entry;
        entry["index"] = census.ne_indices[i];
        entry["social"] = census.ne_socials[i].str();
        CapacityNetwork net =
            CapacityNetwork::build(space.profile_at(census.ne_indices[i]));
        entry["edges"] = network_to_json(net)["edges"];
        j["ne"].push_back(std::move(entry));
    }
    return j;
}

std::string census_csv_header() {
    return "n,k,game,profile_count,ne_labeled_count,ne_iso_count,min_ne_social,"
           "max_ne_social,opt_social,poa,pos\n";
}

std::string census_to_csv_row(const NeCensus &census) {
    std::ostringstream out;
    out << census.n << ',' << census.k << ',' << game_kind_name(census.kind) << ','
        << census.profile_count << ',' << census.ne_labeled_count << ','
        << census.ne_iso_count << ','
        << (census.min_ne_social ? census.min_ne_social->str() : "") << ','
        << (census.max_ne_social ? census.max_ne_social->str() : "") << ','
        << census.opt_social.str() << ',' << (census.poa ? census.poa->str() : "") << ','
        << (census.pos ? census.pos->str() : "") << '\n';
    return out.str();
}

json audit_to_json(const NeAuditReport &report) {
    json j;
    j["game"] = game_kind_name(report.kind);
    j["budget_full"] = report.budget_full;
    j["connected"] = report.connected;
    j["cluster"] = report.cluster ? json(*report.cluster) : json(nullptr);
    j["lambda"] = report.lambda;
    j["required_lambda"] = report.required_lambda;
    j["all_pass"] = report.all_pass();
    return j;
}

json evaluation_to_json(const CapacityNetwork &net, GameKind kind) {
    AllPairsConnectivity conn = all_pairs_matrix(net);
    json j;
    j["game"] = game_kind_name(kind);
    j["n"] = net.n();
    j["k"] = net.budget();
    j["agent_utilities"] = json::array();
    for (int v = 0; v < net.n(); ++v)
        j["agent_utilities"].push_back(utility_to_json(agent_utility_from(conn, v, kind)));
    j["social"] = social_utility_from(conn, kind).str();
    return j;
}

} // namespace flowncg
