#include "enumeration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace exspectra {

std::vector<Graph> free_trees(int n) {
    if (n < 1 || n > 18) throw std::invalid_argument("free tree enumeration supports 1 <= n <= 18");
    std::vector<Graph> current;
    current.push_back(Graph::from_edge_list(1, {}));
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> classes;  // code -> representative
        for (const Graph& t : current) {
            for (int v = 0; v < t.order(); ++v) {
                auto edges = t.edges();
                edges.emplace_back(v, k - 1);
                Graph grown = Graph::from_edge_list(k, edges);
                std::string code = canonical_code_adjlists(k, grown.adjacency_lists());
                classes.emplace(std::move(code), std::move(grown));
            }
        }
        current.clear();
        current.reserve(classes.size());
        for (auto& [code, g] : classes) current.push_back(std::move(g));
    }
    return current;  // map iteration already sorted by code
}

std::vector<std::pair<int, int>> prufer_decode(int n, const std::vector<int>& seq) {
    if (n < 2) throw std::invalid_argument("Prufer decode requires n >= 2");
    if (static_cast<int>(seq.size()) != n - 2) throw std::invalid_argument("Prufer sequence length must be n-2");
    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int v : seq) {
        if (v < 0 || v >= n) throw std::invalid_argument("Prufer entry out of range");
        ++degree[static_cast<size_t>(v)];
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n) - 1);
    int ptr = 0;
    while (degree[static_cast<size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        edges.emplace_back(leaf, v);
        if (--degree[static_cast<size_t>(v)] == 1 && v < ptr) {
            leaf = v;
        } else {
            while (degree[static_cast<size_t>(++ptr)] != 1) {}
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return edges;
}

TreeCountOracle labeled_tree_count_oracle(int n) {
    if (n < 2 || n > 12) throw std::invalid_argument("tree count oracle supports 2 <= n <= 12");
    long long labeled = 1;
    for (int i = 0; i < n - 2; ++i) labeled *= n;

    std::unordered_set<std::string> codes;
    std::vector<int> seq(static_cast<size_t>(std::max(0, n - 2)), 0);
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    while (true) {
        auto edges = prufer_decode(n, seq);
        for (auto& l : adj) l.clear();
        for (auto [u, v] : edges) {
            adj[static_cast<size_t>(u)].push_back(v);
            adj[static_cast<size_t>(v)].push_back(u);
        }
        codes.insert(canonical_code_adjlists(n, adj));
        // odometer
        int pos = 0;
        while (pos < n - 2 && ++seq[static_cast<size_t>(pos)] == n) {
            seq[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos >= n - 2) break;
    }
    return TreeCountOracle{labeled, static_cast<long long>(codes.size())};
}

int pair_index(int n, int i, int j) {
    // upper triangle, row-major: (0,1),(0,2),...,(0,n-1),(1,2),...
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

bool mask_is_connected(int n, uint64_t mask) {
    // adjacency rows as vertex bitsets
    uint32_t adj[8] = {0};
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            if (mask >> k & 1) {
                adj[i] |= uint32_t(1) << j;
                adj[j] |= uint32_t(1) << i;
            }
        }
    }
    uint32_t reached = 1, frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        while (frontier) {
            int v = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            next |= adj[v];
        }
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == (uint32_t(1) << n) - 1;
}

std::vector<int> mask_degrees(int n, uint64_t mask) {
    std::vector<int> deg(static_cast<size_t>(n), 0);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            if (mask >> k & 1) {
                ++deg[static_cast<size_t>(i)];
                ++deg[static_cast<size_t>(j)];
            }
        }
    }
    return deg;
}

Graph graph_from_mask(int n, uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            if (mask >> k & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(n, edges);
}

uint64_t canonical_mask(int n, uint64_t mask) {
    // min edge mask over the relabelings that sort the degree sequence
    // descending; only positions of equal degree get permuted. The set of
    // degree-sorted labelings is isomorphism-invariant, so the minimum is a
    // canonical form.
    std::vector<int> deg = mask_degrees(n, mask);
    std::vector<int> verts(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<size_t>(i)] = i;
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        return deg[static_cast<size_t>(a)] != deg[static_cast<size_t>(b)]
                   ? deg[static_cast<size_t>(a)] > deg[static_cast<size_t>(b)]
                   : a < b;
    });
    std::vector<std::pair<int, int>> blocks;  // [lo, hi) runs of equal degree
    for (int lo = 0; lo < n;) {
        int hi = lo + 1;
        while (hi < n && deg[static_cast<size_t>(verts[static_cast<size_t>(hi)])] ==
                             deg[static_cast<size_t>(verts[static_cast<size_t>(lo)])]) {
            ++hi;
        }
        blocks.emplace_back(lo, hi);
        lo = hi;
    }

    bool adj[8][8] = {};
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            if (mask >> k & 1) adj[i][j] = adj[j][i] = true;
        }
    }

    uint64_t best = ~uint64_t(0);
    std::vector<int> perm = verts;  // perm[pos] = original vertex placed at pos
    while (true) {
        uint64_t m = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j, ++bit) {
                if (adj[perm[static_cast<size_t>(i)]][perm[static_cast<size_t>(j)]]) m |= uint64_t(1) << bit;
            }
        }
        if (m < best) best = m;
        bool advanced = false;
        for (auto [lo, hi] : blocks) {  // odometer over block permutations
            if (std::next_permutation(perm.begin() + lo, perm.begin() + hi)) {
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return best;
}

ConnectedGraphStream::ConnectedGraphStream(int n, bool dedup) : n_(n), dedup_(dedup) {
    if (n < 2 || n > 7) {
        throw std::invalid_argument(
            "connected graph enumeration supports 2 <= n <= 7 (2^21 edge subsets at n=7 is the "
            "practical cost ceiling)");
    }
    mask_count_ = uint64_t(1) << (n * (n - 1) / 2);
}

std::optional<Graph> ConnectedGraphStream::next() {
    while (mask_ < mask_count_) {
        uint64_t m = mask_++;
        if (!mask_is_connected(n_, m)) continue;
        if (dedup_) {
            uint64_t canon = canonical_mask(n_, m);
            auto it = std::lower_bound(seen_.begin(), seen_.end(), canon);
            if (it != seen_.end() && *it == canon) continue;
            seen_.insert(it, canon);
        }
        return graph_from_mask(n_, m);
    }
    return std::nullopt;
}

void for_each_connected_mask(int n, int jobs, const std::function<void(int, uint64_t)>& fn) {
    if (n < 2 || n > 7) throw std::invalid_argument("connected mask scan supports 2 <= n <= 7");
    if (jobs < 1) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    const uint64_t total = uint64_t(1) << (n * (n - 1) / 2);
    if (jobs == 1) {
        for (uint64_t m = 0; m < total; ++m) {
            if (mask_is_connected(n, m)) fn(0, m);
        }
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        uint64_t lo = total * static_cast<uint64_t>(w) / static_cast<uint64_t>(jobs);
        uint64_t hi = total * static_cast<uint64_t>(w + 1) / static_cast<uint64_t>(jobs);
        workers.emplace_back([n, w, lo, hi, &fn] {
            for (uint64_t m = lo; m < hi; ++m) {
                if (mask_is_connected(n, m)) fn(w, m);
            }
        });
    }
    for (auto& t : workers) t.join();
}

long long count_connected_labeled(int n) {
    long long count = 0;
    const uint64_t total = uint64_t(1) << (n * (n - 1) / 2);
    for (uint64_t m = 0; m < total; ++m) {
        if (mask_is_connected(n, m)) ++count;
    }
    return count;
}

}  // namespace exspectra
