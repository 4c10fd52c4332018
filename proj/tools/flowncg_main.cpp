#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "flowncg/analysis.hpp"
#include "flowncg/canonical.hpp"
#include "flowncg/connectivity.hpp"
#include "flowncg/constructions.hpp"
#include "flowncg/dynamics.hpp"
#include "flowncg/games.hpp"
#include "flowncg/io.hpp"

namespace {

using flowncg::ValidationError;

std::string read_all(const std::string &path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open input file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_all(const std::string &path, const std::string &text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file \"" + path + "\"");
    out << text;
    if (!out) throw ValidationError("cannot write output file \"" + path + "\"");
}

flowncg::CapacityNetwork load_network(const std::string &path) {
    return flowncg::network_from_string(read_all(path));
}

// Resolves an agent given by name or numeric id.
int resolve_agent(const flowncg::CapacityNetwork &net, const std::string &agent) {
    auto it = net.names().find(agent);
    if (it != net.names().end()) return it->second;
    try {
        size_t used = 0;
        int id = std::stoi(agent, &used);
        if (used == agent.size() && id >= 0 && id < net.n()) return id;
    } catch (const std::exception &) {
    }
    throw ValidationError("unknown agent \"" + agent + "\" (expected a node name or an id in 0.." +
                          std::to_string(net.n() - 1) + ")");
}

std::string dump(const nlohmann::json &j) { return j.dump(2) + "\n"; }

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Flow-based network creation game toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output = "-";
    std::string game = "avg";
    std::string agent;
    std::string family;
    std::string scheduler = "round-robin";
    std::string policy = "distinct-offsets";
    std::string csv_out;
    int n = 0;
    int k = 0;
    int threads = 1;
    int cluster_j = 0;
    long long steps = 1000;
    long long state_budget = 10000000;
    unsigned long long profile_budget = flowncg::kDefaultProfileBudget;
    std::uint64_t seed = 0;

    CLI::App *construct = app.add_subcommand(
        "construct", "Build a named network family and write its JSON");
    construct->add_option("family", family,
                          "one of: opt, directed-cycle, min-game-worst-ne, "
                          "avg-game-circle-ne, avg-game-star-ne, figure1")
        ->required();
    construct->add_option("--n", n, "number of agents");
    construct->add_option("--k", k, "per-agent capacity budget");
    construct->add_option("--policy", policy,
                          "cycle policy for opt: distinct-offsets or repeat-canonical");
    construct->add_option("-o,--output", output, "output file (default stdout)");

    CLI::App *evaluate = app.add_subcommand(
        "evaluate", "Utilities of a network; with --agent, print just that utility");
    evaluate->add_option("-i,--input", input, "network JSON file (default stdin)");
    evaluate->add_option("-o,--output", output, "output file (default stdout)");
    evaluate->add_option("--game", game, "avg or min");
    evaluate->add_option("--agent", agent, "agent name or id");

    CLI::App *best_response = app.add_subcommand(
        "best-response", "Best response of one agent with the rest fixed");
    best_response->add_option("-i,--input", input, "network JSON file (default stdin)");
    best_response->add_option("-o,--output", output, "output file (default stdout)");
    best_response->add_option("--game", game, "avg or min");
    best_response->add_option("--agent", agent, "agent name or id")->required();

    CLI::App *verify_ne = app.add_subcommand(
        "verify-ne", "Check Nash equilibrium; exit 1 with a witness move if not");
    verify_ne->add_option("-i,--input", input, "network JSON file (default stdin)");
    verify_ne->add_option("-o,--output", output, "output file (default stdout)");
    verify_ne->add_option("--game", game, "avg or min");

    CLI::App *dynamics = app.add_subcommand(
        "dynamics", "Run best-response dynamics and write the trace");
    dynamics->add_option("-i,--input", input, "network JSON file (default stdin)");
    dynamics->add_option("-o,--output", output, "output file (default stdout)");
    dynamics->add_option("--game", game, "avg or min");
    dynamics->add_option("--scheduler", scheduler,
                         "round-robin, random-permutation or first-improving");
    dynamics->add_option("--steps", steps, "maximum number of applied moves");
    dynamics->add_option("--seed", seed, "random-permutation seed (default 0)");

    CLI::App *search_irc = app.add_subcommand(
        "search-irc", "Search the improving-move graph for a cycle");
    search_irc->add_option("--n", n, "number of agents")->required();
    search_irc->add_option("--k", k, "per-agent capacity budget")->required();
    search_irc->add_option("--game", game, "avg or min");
    search_irc->add_option("--budget", state_budget, "maximum distinct states to explore");
    search_irc->add_option("-o,--output", output, "output file (default stdout)");

    CLI::App *census = app.add_subcommand(
        "census", "Exhaustive Nash-equilibrium census over all profiles");
    census->add_option("--n", n, "number of agents")->required();
    census->add_option("--k", k, "per-agent capacity budget")->required();
    census->add_option("--game", game, "avg or min");
    census->add_option("--threads", threads, "worker threads (default 1)");
    census->add_option("--budget", profile_budget,
                       "refuse when the profile count exceeds this");
    census->add_option("-o,--output", output, "JSON report file (default stdout)");
    census->add_option("--csv", csv_out, "also append one CSV row to this file");

    CLI::App *audit = app.add_subcommand(
        "audit", "Structural audit of an equilibrium network; exit 1 on violation");
    audit->add_option("-i,--input", input, "network JSON file (default stdin)");
    audit->add_option("-o,--output", output, "output file (default stdout)");
    audit->add_option("--game", game, "avg or min");
    audit->add_option("--cluster-j", cluster_j,
                      "also search for a j-cluster with this j (default k+1)");

    CLI::App *export_dot =
        app.add_subcommand("export-dot", "Write the network in Graphviz DOT form");
    export_dot->add_option("-i,--input", input, "network JSON file (default stdin)");
    export_dot->add_option("-o,--output", output, "output file (default stdout)");

    CLI::App *verify_trace = app.add_subcommand(
        "verify-trace", "Replay a dynamics trace and check it matches; exit 1 on mismatch");
    verify_trace->add_option("-i,--input", input, "trace JSON file (default stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) {
            flowncg::CapacityNetwork net = [&] {
                if (family == "figure1") return flowncg::build_figure1();
                if (family == "opt")
                    return flowncg::build_opt(n, k, flowncg::parse_cycle_policy(policy));
                if (family == "directed-cycle") return flowncg::build_directed_cycle(n, k);
                if (family == "min-game-worst-ne")
                    return flowncg::build_min_game_worst_ne(n, k);
                if (family == "avg-game-circle-ne")
                    return flowncg::build_avg_game_circle_ne(n, k);
                if (family == "avg-game-star-ne")
                    return flowncg::build_avg_game_star_ne(n, k);
                throw ValidationError("unknown construction \"" + family + "\"");
            }();
            write_all(output, flowncg::network_to_string(net));
            return 0;
        }

        if (evaluate->parsed()) {
            flowncg::GameKind kind = flowncg::parse_game_kind(game);
            flowncg::CapacityNetwork net = load_network(input);
            if (!agent.empty()) {
                int v = resolve_agent(net, agent);
                write_all(output, flowncg::agent_utility(net, v, kind).str() + "\n");
            } else {
                write_all(output, dump(flowncg::evaluation_to_json(net, kind)));
            }
            return 0;
        }

        if (best_response->parsed()) {
            flowncg::GameKind kind = flowncg::parse_game_kind(game);
            flowncg::CapacityNetwork net = load_network(input);
            int v = resolve_agent(net, agent);
            flowncg::BestResponse br = flowncg::best_response(net, v, kind);
            nlohmann::json j;
            j["agent"] = v;
            j["improved"] = br.improved;
            j["strategy"] = flowncg::strategy_to_json(br.strategy);
            j["utility"] = flowncg::utility_to_json(br.utility);
            j["current_utility"] = flowncg::utility_to_json(br.current_utility);
            write_all(output, dump(j));
            return 0;
        }

        if (verify_ne->parsed()) {
            flowncg::GameKind kind = flowncg::parse_game_kind(game);
            flowncg::CapacityNetwork net = load_network(input);
            auto witness = flowncg::find_improving_move(net, kind);
            nlohmann::json j;
            j["is_ne"] = !witness.has_value();
            if (witness) j["witness"] = flowncg::move_to_json(*witness);
            write_all(output, dump(j));
            return witness ? 1 : 0;
        }

        if (dynamics->parsed()) {
            flowncg::GameKind kind = flowncg::parse_game_kind(game);
            flowncg::SchedulerKind sched = flowncg::parse_scheduler(scheduler);
            flowncg::CapacityNetwork net = load_network(input);
            flowncg::DynamicsResult result =
                flowncg::run_dynamics(net, kind, sched, steps, seed);
            flowncg::TraceDocument doc =
                flowncg::make_trace(net, kind, sched, steps, seed, result);
            write_all(output, dump(flowncg::trace_to_json(doc)));
            return 0;
        }

        if (search_irc->parsed()) {
            flowncg::GameKind kind = flowncg::parse_game_kind(game);
            flowncg::IrcSearchResult result =
                flowncg::search_irc(n, k, kind, state_budget);
            write_all(output, dump(flowncg::irc_result_to_json(result, kind)));
            return 0;
        }

        if (census->parsed()) {
            flowncg::GameKind kind = flowncg::parse_game_kind(game);
            flowncg::ProfileSpace space(n, k, profile_budget);
            flowncg::NeCensus result =
                flowncg::ne_census(n, k, kind, threads, profile_budget);
            write_all(output, dump(flowncg::census_to_json(result, space)));
            if (!csv_out.empty()) {
                std::ifstream probe(csv_out);
                bool fresh = !probe || probe.peek() == std::ifstream::traits_type::eof();
                probe.close();
                std::ofstream csv(csv_out, std::ios::app);
                if (!csv) throw ValidationError("cannot open CSV file \"" + csv_out + "\"");
                if (fresh) csv << flowncg::census_csv_header();
                csv << flowncg::census_to_csv_row(result);
            }
            return 0;
        }

        if (audit->parsed()) {
            flowncg::GameKind kind = flowncg::parse_game_kind(game);
            flowncg::CapacityNetwork net = load_network(input);
            flowncg::NeAuditReport report = flowncg::audit_ne(net, kind);
            nlohmann::json j = flowncg::audit_to_json(report);
            if (cluster_j > 0) {
                auto cluster = flowncg::find_cluster(net, cluster_j);
                j["requested_cluster"] =
                    cluster ? nlohmann::json(*cluster) : nlohmann::json(nullptr);
            }
            write_all(output, dump(j));
            return report.all_pass() ? 0 : 1;
        }

        if (export_dot->parsed()) {
            flowncg::CapacityNetwork net = load_network(input);
            write_all(output, flowncg::network_to_dot(net));
            return 0;
        }

        if (verify_trace->parsed()) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(read_all(input));
            } catch (const nlohmann::json::parse_error &e) {
                throw ValidationError(std::string("trace: JSON parse error: ") + e.what());
            }
            flowncg::TraceDocument doc = flowncg::trace_from_json(j);
            try {
                flowncg::verify_trace(doc);
            } catch (const ValidationError &e) {
                std::cerr << e.what() << "\n";
                return 1;
            }
            std::cout << "trace verified: " << doc.moves.size() << " moves, outcome "
                      << flowncg::dynamics_status_name(doc.status) << "\n";
            return 0;
        }
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
