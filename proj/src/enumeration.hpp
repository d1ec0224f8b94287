#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace exspectra {

// One representative per isomorphism class of trees on n vertices, in
// canonical-code order. Built by leaf extension from the classes one order
// down, deduplicated by canonical code. 1 <= n <= 18.
std::vector<Graph> free_trees(int n);

struct TreeCountOracle {
    long long labeled;  // n^(n-2)
    long long classes;  // distinct canonical codes over all Prufer sequences
};

// Brute force over every Prufer sequence; 2 <= n <= 12 (cost grows as n^(n-2)).
TreeCountOracle labeled_tree_count_oracle(int n);

// Decode a Prufer sequence (length n-2, entries in [0,n)) into tree edges.
std::vector<std::pair<int, int>> prufer_decode(int n, const std::vector<int>& seq);

// Labeled connected graphs on n vertices, 2 <= n <= 7, in edge-mask order;
// dedup yields one representative per isomorphism class (minimum-permutation
// canonical form over degree-sorted relabelings).
class ConnectedGraphStream {
public:
    ConnectedGraphStream(int n, bool dedup);
    std::optional<Graph> next();
    int order() const { return n_; }

private:
    int n_;
    bool dedup_;
    uint64_t mask_ = 0;
    uint64_t mask_count_;
    std::vector<uint64_t> seen_;  // sorted canonical masks
};

// Visits every connected edge mask on n labeled vertices (bit k of the mask is
// the k-th pair (i,j), i<j, in lexicographic order). Masks are split across
// `jobs` workers; fn receives (worker, mask) and must be safe to call
// concurrently for distinct workers.
void for_each_connected_mask(int n, int jobs, const std::function<void(int, uint64_t)>& fn);

int pair_index(int n, int i, int j);
bool mask_is_connected(int n, uint64_t mask);
std::vector<int> mask_degrees(int n, uint64_t mask);
Graph graph_from_mask(int n, uint64_t mask);
uint64_t canonical_mask(int n, uint64_t mask);

long long count_connected_labeled(int n);

}  // namespace exspectra
