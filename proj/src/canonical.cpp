#include "flowncg/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace flowncg {

NetworkCode encode_labeled(const CapacityNetwork &net) {
    const int n = net.n();
    const unsigned width = std::bit_width((unsigned)net.budget());
    NetworkCode code;
    code.words.assign(((size_t)n * (n - 1) * width + 63) / 64, 0);
    size_t bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            std::uint64_t c = (std::uint64_t)net.directed_capacity(u, v);
            code.words[bit / 64] |= c << (bit % 64);
            if (bit % 64 + width > 64) code.words[bit / 64 + 1] |= c >> (64 - bit % 64);
            bit += width;
        }
    }
    return code;
}

std::vector<int> iso_canonical_matrix(const CapacityNetwork &net) {
    const int n = net.n();
    if (n > 8) throw std::invalid_argument("iso_canonical_matrix: brute force limited to n <= 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    std::vector<int> relabeled((size_t)n * n);
    do {
        // perm[v] = new label of node v
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                relabeled[(size_t)perm[u] * n + perm[v]] = net.directed_capacity(u, v);
        if (best.empty() || relabeled < best) best = relabeled;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool isomorphic(const CapacityNetwork &a, const CapacityNetwork &b) {
    if (a.n() != b.n()) return false;
    return iso_canonical_matrix(a) == iso_canonical_matrix(b);
}

} // namespace flowncg
