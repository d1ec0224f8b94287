#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "graph.hpp"

namespace testutil {

// deterministic by default; EXSPECTRA_SEED overrides for randomized runs
struct Rng {
    uint64_t state;
    Rng() : state(0x9e3779b97f4a7c15ull) {
        if (const char* env = std::getenv("EXSPECTRA_SEED")) {
            state ^= std::strtoull(env, nullptr, 10) * 0x2545f4914f6cdd1dull + 1;
        }
    }
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    return perm;
}

inline exspectra::Graph relabel(const exspectra::Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return exspectra::Graph::from_edge_list(g.order(), edges);
}

// random labeled tree on n vertices via a random attachment sequence
inline exspectra::Graph random_tree(int n, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
    return exspectra::Graph::from_edge_list(n, edges);
}

}  // namespace testutil
