#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "enumeration.hpp"
#include "graph.hpp"
#include "test_util.hpp"

using namespace exspectra;

namespace {

// known class counts; certified against the Prufer oracle on the overlap below
const long long kTreeClassCounts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};

}  // namespace

TEST_CASE("free tree class counts") {
    for (int n = 1; n <= 14; ++n) {
        CHECK(static_cast<long long>(free_trees(n).size()) == kTreeClassCounts[n]);
    }
    CHECK_THROWS_AS(free_trees(0), std::invalid_argument);
    CHECK_THROWS_AS(free_trees(19), std::invalid_argument);
}

TEST_CASE("free tree stream invariants") {
    for (int n = 2; n <= 10; ++n) {
        std::vector<Graph> trees = free_trees(n);
        std::vector<std::string> codes;
        for (const Graph& t : trees) {
            CHECK(t.order() == n);
            CHECK(t.is_tree());
            int degree_sum = 0;
            for (int d : t.degrees()) degree_sum += d;
            CHECK(degree_sum == 2 * t.size());
            codes.push_back(canonical_code(t));
        }
        CHECK(std::is_sorted(codes.begin(), codes.end()));
        CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());

        // the path and the star each appear exactly once
        CHECK(std::binary_search(codes.begin(), codes.end(), canonical_code(path_graph(n))));
        CHECK(std::binary_search(codes.begin(), codes.end(), canonical_code(star_graph(n))));
    }
}

TEST_CASE("prufer decode") {
    auto star = prufer_decode(4, {0, 0});
    Graph s = Graph::from_edge_list(4, star);
    CHECK(s.degree(0) == 3);

    auto path = prufer_decode(4, {1, 2});
    CHECK(canonical_code(Graph::from_edge_list(4, path)) == canonical_code(path_graph(4)));

    CHECK(prufer_decode(2, {}).size() == 1);
    CHECK_THROWS_AS(prufer_decode(4, {0}), std::invalid_argument);
    CHECK_THROWS_AS(prufer_decode(4, {0, 9}), std::invalid_argument);
}

TEST_CASE("labeled tree count oracle certifies the generator") {
    CHECK(labeled_tree_count_oracle(3).labeled == 3);
    CHECK(labeled_tree_count_oracle(3).classes == 1);
    CHECK(labeled_tree_count_oracle(5).labeled == 125);
    CHECK(labeled_tree_count_oracle(5).classes == 3);
    for (int n = 2; n <= 9; ++n) {
        TreeCountOracle oracle = labeled_tree_count_oracle(n);
        long long expected_labeled = 1;
        for (int i = 0; i < n - 2; ++i) expected_labeled *= n;
        CHECK(oracle.labeled == expected_labeled);
        CHECK(oracle.classes == static_cast<long long>(free_trees(n).size()));
    }
    CHECK_THROWS_AS(labeled_tree_count_oracle(1), std::invalid_argument);
    CHECK_THROWS_AS(labeled_tree_count_oracle(13), std::invalid_argument);
}

TEST_CASE("labeled connected graph counts") {
    CHECK(count_connected_labeled(3) == 4);
    CHECK(count_connected_labeled(4) == 38);
    CHECK(count_connected_labeled(5) == 728);
    CHECK(count_connected_labeled(6) == 26704);
}

TEST_CASE("connected stream yields connected simple graphs") {
    ConnectedGraphStream stream(4, false);
    long long count = 0;
    while (auto g = stream.next()) {
        CHECK(g->order() == 4);
        CHECK(g->is_connected());
        ++count;
    }
    CHECK(count == 38);
    CHECK_THROWS_AS(ConnectedGraphStream(8, false), std::invalid_argument);
    CHECK_THROWS_AS(ConnectedGraphStream(1, false), std::invalid_argument);
}

TEST_CASE("isomorphism dedup counts") {
    for (auto [n, expected] : {std::pair<int, long long>{3, 2}, {4, 6}, {5, 21}, {6, 112}}) {
        ConnectedGraphStream stream(n, true);
        long long count = 0;
        while (stream.next()) ++count;
        CHECK(count == expected);
    }
}

TEST_CASE("counts survive a shuffled recount with independent machinery") {
    // same numbers out of a different traversal order, a union-find
    // connectivity check, and a full-permutation canonical form
    testutil::Rng rng;
    const int n = 5;
    const int bits = n * (n - 1) / 2;
    std::vector<uint64_t> masks(uint64_t(1) << bits);
    for (uint64_t m = 0; m < masks.size(); ++m) masks[m] = m;
    for (size_t i = masks.size() - 1; i > 0; --i) {
        std::swap(masks[i], masks[rng.below(static_cast<int>(i + 1))]);
    }

    auto connected_uf = [&](uint64_t mask) {
        int parent[5];
        for (int i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        int k = 0, merges = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j, ++k) {
                if (!(mask >> k & 1)) continue;
                int a = find(i), b = find(j);
                if (a != b) {
                    parent[a] = b;
                    ++merges;
                }
            }
        }
        return merges == n - 1;
    };
    auto full_canonical = [&](uint64_t mask) {
        int perm[5] = {0, 1, 2, 3, 4};
        bool adj[5][5] = {};
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if (mask >> k & 1) adj[i][j] = adj[j][i] = true;
        uint64_t best = ~uint64_t(0);
        do {
            uint64_t m = 0;
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (adj[perm[i]][perm[j]]) m |= uint64_t(1) << bit;
            best = std::min(best, m);
        } while (std::next_permutation(perm, perm + n));
        return best;
    };

    long long labeled = 0;
    std::set<uint64_t> classes;
    for (uint64_t mask : masks) {
        if (!connected_uf(mask)) continue;
        ++labeled;
        classes.insert(full_canonical(mask));
    }
    CHECK(labeled == 728);
    CHECK(static_cast<long long>(classes.size()) == 21);
}

TEST_CASE("mask helpers") {
    // triangle on {0,1,2}: edges (0,1),(0,2),(1,2) are bits 0,1,4 at n=4
    CHECK(pair_index(4, 0, 1) == 0);
    CHECK(pair_index(4, 0, 2) == 1);
    CHECK(pair_index(4, 1, 2) == 3);
    uint64_t triangle = (1u << pair_index(4, 0, 1)) | (1u << pair_index(4, 0, 2)) |
                        (1u << pair_index(4, 1, 2));
    CHECK_FALSE(mask_is_connected(4, triangle));  // vertex 3 stranded
    CHECK(mask_degrees(4, triangle) == std::vector<int>{2, 2, 2, 0});
    Graph g = graph_from_mask(4, triangle);
    CHECK(g.size() == 3);

    // canonical form identifies relabeled copies
    testutil::Rng rng;
    for (int trial = 0; trial < 50; ++trial) {
        Graph t = testutil::random_tree(5, rng);
        uint64_t mask = 0;
        for (auto [u, v] : t.edges()) mask |= uint64_t(1) << pair_index(5, u, v);
        auto perm = testutil::random_permutation(5, rng);
        uint64_t relabeled = 0;
        for (auto [u, v] : t.edges()) {
            int a = perm[u], b = perm[v];
            if (a > b) std::swap(a, b);
            relabeled |= uint64_t(1) << pair_index(5, a, b);
        }
        CHECK(canonical_mask(5, mask) == canonical_mask(5, relabeled));
    }
}
