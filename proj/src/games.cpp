#include "flowncg/games.hpp"

#include <stdexcept>

namespace flowncg {

std::string game_kind_name(GameKind kind) {
    return kind == GameKind::AvgFlow ? "avg" : "min";
}

GameKind parse_game_kind(const std::string &name) {
    if (name == "avg" || name == "avg-flow" || name == "average") return GameKind::AvgFlow;
    if (name == "min" || name == "min-flow" || name == "minimum") return GameKind::MinFlow;
    throw std::invalid_argument("unknown game kind '" + name + "' (expected 'avg' or 'min')");
}

std::string UtilityValue::str() const {
    if (kind == GameKind::AvgFlow) return avg.str();
    return "(" + std::to_string(u1) + "," + std::to_string(u2) + ")";
}

int compare(const UtilityValue &a, const UtilityValue &b) {
    if (a.kind != b.kind)
        throw std::invalid_argument("compare: utilities from different game kinds");
    if (a.kind == GameKind::AvgFlow) return a.avg.compare(b.avg);
    if (a.u1 != b.u1) return a.u1 < b.u1 ? -1 : 1;
    if (a.u2 != b.u2) return a.u2 < b.u2 ? -1 : 1;
    return 0;
}

UtilityValue agent_utility_from(const AllPairsConnectivity &conn, int v, GameKind kind) {
    const int n = conn.n;
    if (v < 0 || v >= n) throw std::invalid_argument("agent_utility: node out of range");
    if (kind == GameKind::AvgFlow) {
        long long sum = 0;
        for (int i = 0; i < n; ++i)
            if (i != v) sum += conn.at(v, i);
        return UtilityValue::average(Rational(sum, n - 1));
    }
    long long well_connected = 0;
    for (int i = 0; i < n; ++i)
        if (i != v && conn.at(i, v) > conn.global) ++well_connected;
    return UtilityValue::minimum(conn.global, well_connected);
}

UtilityValue agent_utility(const CapacityNetwork &net, int v, GameKind kind) {
    return agent_utility_from(all_pairs_matrix(net), v, kind);
}

Rational social_utility_from(const AllPairsConnectivity &conn, GameKind kind) {
    const int n = conn.n;
    if (kind == GameKind::MinFlow) return Rational(conn.global);
    long long sum = 0;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < n; ++i)
            if (i != v) sum += conn.at(v, i);
    return Rational(sum, (long long)n * (n - 1));
}

Rational social_utility(const CapacityNetwork &net, GameKind kind) {
    return social_utility_from(all_pairs_matrix(net), kind);
}

} // namespace flowncg
