#include "flowncg/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "flowncg/canonical.hpp"
#include "flowncg/connectivity.hpp"

namespace flowncg {

namespace {

void require_nk(int n, int k, const char *what) {
    if (n < 2)
        throw ValidationError(std::string(what) + ": n must be at least 2, got " +
                              std::to_string(n));
    if (k < 1 || k >= n)
        throw ValidationError(std::string(what) + ": k must satisfy 1 <= k < n, got k=" +
                              std::to_string(k) + " with n=" + std::to_string(n));
}

} // namespace

std::vector<Strategy> enumerate_strategies(int n, int k, int owner) {
    require_nk(n, k, "enumerate_strategies");
    if (owner < 0 || owner >= n)
        throw ValidationError("enumerate_strategies: owner " + std::to_string(owner) +
                              " out of range for n=" + std::to_string(n));
    std::vector<int> targets;
    targets.reserve(n - 1);
    for (int t = 0; t < n; ++t)
        if (t != owner) targets.push_back(t);

    std::vector<Strategy> out;
    std::vector<int> caps(targets.size(), 0);
    auto rec = [&](auto &&self, size_t pos, int remaining) -> void {
        if (pos == caps.size()) {
            Strategy s;
            for (size_t i = 0; i < targets.size(); ++i)
                if (caps[i] > 0) s.purchases.push_back({targets[i], caps[i]});
            out.push_back(std::move(s));
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            caps[pos] = c;
            self(self, pos + 1, remaining - c);
        }
        caps[pos] = 0;
    };
    rec(rec, 0, k);
    return out;
}

unsigned long long strategy_space_size(int n, int k) {
    require_nk(n, k, "strategy_space_size");
    unsigned __int128 total = 0;
    const unsigned __int128 cap = (unsigned __int128)~0ull;
    for (int t = 0; t <= k; ++t) {
        // weak compositions of t into n-1 parts: C(t + n - 2, n - 2)
        unsigned __int128 c = 1;
        for (int i = 1; i <= n - 2; ++i) {
            c = c * (unsigned)(t + i) / (unsigned)i;
            if (c > cap)
                throw ValidationError("strategy_space_size: count exceeds 64 bits for n=" +
                                      std::to_string(n) + ", k=" + std::to_string(k));
        }
        total += c;
        if (total > cap)
            throw ValidationError("strategy_space_size: count exceeds 64 bits for n=" +
                                  std::to_string(n) + ", k=" + std::to_string(k));
    }
    return (unsigned long long)total;
}

BestResponse best_response(const CapacityNetwork &net, int v, GameKind kind) {
    const int n = net.n();
    if (v < 0 || v >= n)
        throw ValidationError("best_response: agent " + std::to_string(v) +
                              " out of range for n=" + std::to_string(n));
    const Strategy &current = net.strategy_of(v);
    UtilityValue current_u = agent_utility(net, v, kind);

    std::optional<Strategy> best_s;
    std::optional<UtilityValue> best_u;
    std::vector<Strategy> candidates = enumerate_strategies(n, net.budget(), v);
    for (Strategy &s : candidates) {
        if (s == current) continue;
        CapacityNetwork cand = net.with_strategy(v, s);
        UtilityValue u = agent_utility(cand, v, kind);
        if (!best_u || compare(u, *best_u) > 0 ||
            (compare(u, *best_u) == 0 && s < *best_s)) {
            best_s = std::move(s);
            best_u = u;
        }
    }
    if (best_u && compare(*best_u, current_u) > 0)
        return {std::move(*best_s), *best_u, current_u, true};
    return {current, current_u, current_u, false};
}

std::optional<MoveRecord> find_improving_move(const CapacityNetwork &net, GameKind kind) {
    for (int v = 0; v < net.n(); ++v) {
        BestResponse br = best_response(net, v, kind);
        if (br.improved)
            return MoveRecord{v, net.strategy_of(v), std::move(br.strategy),
                              br.current_utility, br.utility};
    }
    return std::nullopt;
}

bool is_nash(const CapacityNetwork &net, GameKind kind) {
    return !find_improving_move(net, kind).has_value();
}

std::string scheduler_name(SchedulerKind kind) {
    switch (kind) {
    case SchedulerKind::RoundRobin: return "round-robin";
    case SchedulerKind::RandomPermutation: return "random-permutation";
    case SchedulerKind::FirstImproving: return "first-improving";
    }
    throw std::invalid_argument("scheduler_name: bad enum value");
}

SchedulerKind parse_scheduler(const std::string &name) {
    if (name == "round-robin") return SchedulerKind::RoundRobin;
    if (name == "random-permutation") return SchedulerKind::RandomPermutation;
    if (name == "first-improving") return SchedulerKind::FirstImproving;
    throw ValidationError("unknown scheduler \"" + name +
                          "\" (expected \"round-robin\", \"random-permutation\" or "
                          "\"first-improving\")");
}

std::string dynamics_status_name(DynamicsStatus status) {
    switch (status) {
    case DynamicsStatus::ReachedNE: return "reached-ne";
    case DynamicsStatus::RevisitedState: return "revisited-state";
    case DynamicsStatus::StepLimit: return "step-limit";
    }
    throw std::invalid_argument("dynamics_status_name: bad enum value");
}

DynamicsResult run_dynamics(const CapacityNetwork &start, GameKind kind,
                            SchedulerKind scheduler, long long step_limit,
                            std::uint64_t seed) {
    if (step_limit < 0)
        throw ValidationError("run_dynamics: step limit must be non-negative, got " +
                              std::to_string(step_limit));
    const int n = start.n();
    CapacityNetwork net = start;
    DynamicsResult result;

    std::unordered_map<NetworkCode, long long, NetworkCodeHash> seen;
    seen.emplace(encode_labeled(net), 0);

    std::vector<char> confirmed(n, 0);
    int confirmed_count = 0;
    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    size_t order_pos = order.size();
    int rr_next = 0;
    bool done = false;

    // Applies one improving move; sets status and returns false when the
    // walk must stop (step limit hit or a labeled state repeated).
    auto apply_move = [&](int v, Strategy after, const UtilityValue &u_before,
                          const UtilityValue &u_after) -> bool {
        if ((long long)result.moves.size() >= step_limit) {
            result.status = DynamicsStatus::StepLimit;
            return false;
        }
        result.moves.push_back({v, net.strategy_of(v), after, u_before, u_after});
        net = net.with_strategy(v, std::move(after));
        std::fill(confirmed.begin(), confirmed.end(), 0);
        confirmed[v] = 1;
        confirmed_count = 1;
        NetworkCode code = encode_labeled(net);
        auto it = seen.find(code);
        if (it != seen.end()) {
            result.status = DynamicsStatus::RevisitedState;
            result.revisit_first_index = it->second;
            return false;
        }
        seen.emplace(std::move(code), (long long)result.moves.size());
        return true;
    };

    if (scheduler == SchedulerKind::FirstImproving) {
        while (!done) {
            auto mv = find_improving_move(net, kind);
            if (!mv) {
                result.status = DynamicsStatus::ReachedNE;
                break;
            }
            done = !apply_move(mv->agent, std::move(mv->after), mv->utility_before,
                               mv->utility_after);
        }
    } else {
        while (!done) {
            if (confirmed_count == n) {
                result.status = DynamicsStatus::ReachedNE;
                break;
            }
            int v;
            if (scheduler == SchedulerKind::RoundRobin) {
                v = rr_next;
                rr_next = (rr_next + 1) % n;
            } else {
                if (order_pos == order.size()) {
                    // Fisher-Yates with explicit modulo draws: identical
                    // sequences on every platform for a fixed seed.
                    for (int i = n - 1; i >= 1; --i) {
                        int j = (int)(rng() % (std::uint64_t)(i + 1));
                        std::swap(order[i], order[j]);
                    }
                    order_pos = 0;
                }
                v = order[order_pos++];
            }
            BestResponse br = best_response(net, v, kind);
            if (!br.improved) {
                if (!confirmed[v]) {
                    confirmed[v] = 1;
                    ++confirmed_count;
                }
                continue;
            }
            done = !apply_move(v, std::move(br.strategy), br.current_utility, br.utility);
        }
    }
    result.final_profile = net.profile();
    return result;
}

std::string irc_status_name(IrcStatus status) {
    switch (status) {
    case IrcStatus::CycleFound: return "cycle-found";
    case IrcStatus::NoneExhaustive: return "none-exhaustive";
    case IrcStatus::Inconclusive: return "inconclusive";
    }
    throw std::invalid_argument("irc_status_name: bad enum value");
}

namespace {

// Fixed-width state key: the n*(n-1) off-diagonal directed capacities packed
// at bit_width(k) bits each, restricted to keys that fit 128 bits.
struct Key128 {
    std::uint64_t lo = 0, hi = 0;

    bool operator==(const Key128 &o) const = default;
};

struct PackSpec {
    int n = 0;
    int k = 0;
    int width = 0;
};

PackSpec make_pack_spec(int n, int k) {
    PackSpec spec{n, k, (int)std::bit_width((unsigned)k)};
    if (n * (n - 1) * spec.width > 128)
        throw ValidationError("search_irc: state key for n=" + std::to_string(n) +
                              ", k=" + std::to_string(k) + " exceeds 128 bits");
    return spec;
}

void key_set_bits(Key128 &key, int pos, int width, std::uint64_t value) {
    if (pos < 64) {
        key.lo |= value << pos;
        if (pos + width > 64) key.hi |= value >> (64 - pos);
    } else {
        key.hi |= value << (pos - 64);
    }
}

std::uint64_t key_get_bits(const Key128 &key, int pos, int width) {
    std::uint64_t v;
    if (pos < 64) {
        v = key.lo >> pos;
        if (pos + width > 64) v |= key.hi << (64 - pos);
    } else {
        v = key.hi >> (pos - 64);
    }
    return v & ((1ull << width) - 1);
}

int entry_index(int owner, int target, int n) {
    return owner * (n - 1) + (target < owner ? target : target - 1);
}

Key128 pack_strategies(const PackSpec &spec,
                       const std::vector<const Strategy *> &strategies) {
    Key128 key;
    for (int o = 0; o < spec.n; ++o)
        for (const Purchase &p : strategies[o]->purchases)
            key_set_bits(key, entry_index(o, p.target, spec.n) * spec.width, spec.width,
                         (std::uint64_t)p.capacity);
    return key;
}

Key128 pack_profile(const StrategyProfile &profile, const PackSpec &spec) {
    std::vector<const Strategy *> refs(profile.strategies.size());
    for (size_t i = 0; i < refs.size(); ++i) refs[i] = &profile.strategies[i];
    return pack_strategies(spec, refs);
}

StrategyProfile unpack_profile(const Key128 &key, const PackSpec &spec) {
    StrategyProfile profile;
    profile.n = spec.n;
    profile.k = spec.k;
    profile.strategies.resize(spec.n);
    for (int o = 0; o < spec.n; ++o)
        for (int t = 0; t < spec.n; ++t) {
            if (t == o) continue;
            auto c = key_get_bits(key, entry_index(o, t, spec.n) * spec.width, spec.width);
            if (c > 0) profile.strategies[o].purchases.push_back({t, (int)c});
        }
    return profile;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint8_t kGray = 1;
constexpr std::uint8_t kBlack = 2;

// Open-addressing color map over Key128: flat arrays, linear probing.
// Keeps per-state overhead at 17 bytes so a 10^7-state search stays well
// under half a gigabyte.
class ColorTable {
  public:
    ColorTable() : keys_(kInitial), color_(kInitial, 0) {}

    std::uint8_t get(const Key128 &key) const { return color_[slot(key)]; }

    void set(const Key128 &key, std::uint8_t color) {
        size_t s = slot(key);
        if (color_[s] == 0) {
            keys_[s] = key;
            ++count_;
            color_[s] = color;
            if (count_ * 10 >= keys_.size() * 7) grow();
        } else {
            color_[s] = color;
        }
    }

    size_t size() const { return count_; }

  private:
    static constexpr size_t kInitial = 1 << 16;

    size_t slot(const Key128 &key) const {
        size_t mask = keys_.size() - 1;
        size_t idx = (splitmix64(key.lo) ^ splitmix64(key.hi + 0x632be59bd9b4e019ull)) & mask;
        while (color_[idx] != 0 && !(keys_[idx] == key)) idx = (idx + 1) & mask;
        return idx;
    }

    void grow() {
        std::vector<Key128> old_keys = std::move(keys_);
        std::vector<std::uint8_t> old_color = std::move(color_);
        keys_.assign(old_keys.size() * 2, Key128{});
        color_.assign(old_color.size() * 2, 0);
        size_t mask = keys_.size() - 1;
        for (size_t i = 0; i < old_keys.size(); ++i) {
            if (old_color[i] == 0) continue;
            size_t idx = (splitmix64(old_keys[i].lo) ^
                          splitmix64(old_keys[i].hi + 0x632be59bd9b4e019ull)) &
                         mask;
            while (color_[idx] != 0) idx = (idx + 1) & mask;
            keys_[idx] = old_keys[i];
            color_[idx] = old_color[i];
        }
    }

    std::vector<Key128> keys_;
    std::vector<std::uint8_t> color_;
    size_t count_ = 0;
};

struct Frame {
    Key128 code;
    int v = 0;  // next candidate agent
    int si = 0; // next candidate strategy index for that agent
};

struct DecodedState {
    StrategyProfile profile;
    CapacityNetwork net;
    std::vector<std::optional<UtilityValue>> agent_u;
};

DecodedState decode_state(const Key128 &code, const PackSpec &spec) {
    StrategyProfile profile = unpack_profile(code, spec);
    CapacityNetwork net = CapacityNetwork::build(profile);
    return {std::move(profile), std::move(net),
            std::vector<std::optional<UtilityValue>>(spec.n)};
}

} // namespace

IrcSearchResult search_irc(int n, int k, GameKind kind, long long state_budget) {
    require_nk(n, k, "search_irc");
    if (state_budget < 1)
        throw ValidationError("search_irc: state budget must be positive, got " +
                              std::to_string(state_budget));
    const PackSpec spec = make_pack_spec(n, k);

    std::vector<std::vector<Strategy>> strat(n);
    for (int v = 0; v < n; ++v) strat[v] = enumerate_strategies(n, k, v);
    const int per_agent = (int)strat[0].size();

    IrcSearchResult result;
    result.n = n;
    result.k = k;

    ColorTable color;
    std::vector<Frame> stack;
    std::optional<DecodedState> top;

    auto utility_of = [&](int v) -> const UtilityValue & {
        auto &slot = top->agent_u[v];
        if (!slot) slot = agent_utility(top->net, v, kind);
        return *slot;
    };

    // Rebuilds a cycle from the gray frame holding `back_code` through the
    // top of the stack, closed by the candidate move (v, cand).
    auto build_cycle = [&](const Key128 &back_code, int v, const Strategy &cand) {
        size_t base = stack.size() - 1;
        while (!(stack[base].code == back_code)) {
            if (base == 0)
                throw std::logic_error("search_irc: gray state missing from the path");
            --base;
        }
        ImprovingCycle cycle;
        cycle.start = unpack_profile(stack[base].code, spec);
        CapacityNetwork walk = CapacityNetwork::build(cycle.start);
        for (size_t i = base + 1; i < stack.size(); ++i) {
            StrategyProfile next = unpack_profile(stack[i].code, spec);
            int mover = -1;
            for (int a = 0; a < n; ++a)
                if (!(walk.profile().strategies[a] == next.strategies[a])) {
                    mover = a;
                    break;
                }
            CapacityNetwork after = walk.with_strategy(mover, next.strategies[mover]);
            cycle.moves.push_back({mover, walk.strategy_of(mover), next.strategies[mover],
                                   agent_utility(walk, mover, kind),
                                   agent_utility(after, mover, kind)});
            walk = std::move(after);
        }
        CapacityNetwork closed = walk.with_strategy(v, cand);
        cycle.moves.push_back({v, walk.strategy_of(v), cand,
                               agent_utility(walk, v, kind),
                               agent_utility(closed, v, kind)});
        return cycle;
    };

    std::vector<int> digits(n, 0);
    bool roots_done = false;
    while (!roots_done) {
        Key128 root_code;
        {
            std::vector<const Strategy *> refs(n);
            for (int v = 0; v < n; ++v) refs[v] = &strat[v][digits[v]];
            root_code = pack_strategies(spec, refs);
        }
        if (color.get(root_code) == 0) {
            if ((long long)color.size() >= state_budget) {
                result.status = IrcStatus::Inconclusive;
                result.states_explored = (long long)color.size();
                return result;
            }
            color.set(root_code, kGray);
            stack.push_back({root_code, 0, 0});
            top = decode_state(root_code, spec);

            while (!stack.empty()) {
                Frame &fr = stack.back();
                bool descended = false;
                while (fr.v < n) {
                    if (fr.si >= per_agent) {
                        ++fr.v;
                        fr.si = 0;
                        continue;
                    }
                    const int v = fr.v;
                    const Strategy &cand = strat[v][fr.si];
                    ++fr.si;
                    if (cand == top->profile.strategies[v]) continue;
                    CapacityNetwork cnet = top->net.with_strategy(v, cand);
                    UtilityValue u_cand = agent_utility(cnet, v, kind);
                    if (compare(u_cand, utility_of(v)) <= 0) continue;
                    Key128 ccode = pack_profile(cnet.profile(), spec);
                    std::uint8_t c = color.get(ccode);
                    if (c == kBlack) continue;
                    if (c == kGray) {
                        ImprovingCycle cycle = build_cycle(ccode, v, cand);
                        verify_cycle(cycle, kind);
                        result.status = IrcStatus::CycleFound;
                        result.cycle = std::move(cycle);
                        result.states_explored = (long long)color.size();
                        return result;
                    }
                    if ((long long)color.size() >= state_budget) {
                        result.status = IrcStatus::Inconclusive;
                        result.states_explored = (long long)color.size();
                        return result;
                    }
                    color.set(ccode, kGray);
                    stack.push_back({ccode, 0, 0});
                    DecodedState child{cnet.profile(), std::move(cnet),
                                       std::vector<std::optional<UtilityValue>>(n)};
                    child.agent_u[v] = std::move(u_cand);
                    top = std::move(child);
                    descended = true;
                    break;
                }
                if (!descended) {
                    color.set(stack.back().code, kBlack);
                    stack.pop_back();
                    if (!stack.empty()) top = decode_state(stack.back().code, spec);
                }
            }
            top.reset();
        }
        // advance the root odometer; agent 0's index is most significant
        int pos = n - 1;
        while (pos >= 0) {
            if (++digits[pos] < per_agent) break;
            digits[pos] = 0;
            --pos;
        }
        roots_done = pos < 0;
    }
    result.status = IrcStatus::NoneExhaustive;
    result.states_explored = (long long)color.size();
    return result;
}

void verify_cycle(const ImprovingCycle &cycle, GameKind kind) {
    if (cycle.moves.empty())
        throw ValidationError("verify_cycle: cycle has no moves");
    CapacityNetwork net = CapacityNetwork::build(cycle.start);
    NetworkCode start_code = encode_labeled(net);
    for (size_t i = 0; i < cycle.moves.size(); ++i) {
        const MoveRecord &mv = cycle.moves[i];
        if (mv.agent < 0 || mv.agent >= net.n())
            throw ValidationError("verify_cycle: move " + std::to_string(i) +
                                  " names agent " + std::to_string(mv.agent) +
                                  " out of range");
        if (!(net.strategy_of(mv.agent) == mv.before))
            throw ValidationError("verify_cycle: move " + std::to_string(i) +
                                  " does not match the current strategy of agent " +
                                  std::to_string(mv.agent));
        if (mv.utility_before.kind != kind || mv.utility_after.kind != kind)
            throw ValidationError("verify_cycle: move " + std::to_string(i) +
                                  " records utilities for the wrong game");
        UtilityValue before = agent_utility(net, mv.agent, kind);
        CapacityNetwork next = net.with_strategy(mv.agent, mv.after);
        UtilityValue after = agent_utility(next, mv.agent, kind);
        if (compare(before, mv.utility_before) != 0 ||
            compare(after, mv.utility_after) != 0)
            throw ValidationError("verify_cycle: move " + std::to_string(i) +
                                  " records utilities that do not match the replay");
        if (compare(after, before) <= 0)
            throw ValidationError("verify_cycle: move " + std::to_string(i) +
                                  " is not strictly improving for agent " +
                                  std::to_string(mv.agent));
        net = std::move(next);
    }
    if (!(encode_labeled(net) == start_code))
        throw ValidationError("verify_cycle: end state differs from the start state");
}

} // namespace flowncg
