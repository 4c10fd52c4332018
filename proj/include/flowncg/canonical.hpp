#pragma once

#include <cstdint>
#include <vector>

#include "flowncg/network.hpp"

namespace flowncg {

// Compact encoding of a labeled network: the n*(n-1) off-diagonal directed
// capacities packed at bit_width(k) bits each. Two networks over the same
// (n, k) get equal codes iff they are identical as labeled networks.
struct NetworkCode {
    std::vector<std::uint64_t> words;

    bool operator==(const NetworkCode &o) const = default;
    auto operator<=>(const NetworkCode &o) const = default;
};

struct NetworkCodeHash {
    size_t operator()(const NetworkCode &code) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t w : code.words) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return (size_t)h;
    }
};

NetworkCode encode_labeled(const CapacityNetwork &net);

// Lexicographically smallest relabeled directed capacity matrix over all
// node permutations. Brute force, n <= 8. Two networks get equal canonical
// matrices iff they are isomorphic as capacitated directed graphs.
std::vector<int> iso_canonical_matrix(const CapacityNetwork &net);

bool isomorphic(const CapacityNetwork &a, const CapacityNetwork &b);

} // namespace flowncg
