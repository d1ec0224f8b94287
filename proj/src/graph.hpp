#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace exspectra {

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// edges are stored sorted with u < v, deduplicated; degrees are cached.
class Graph {
public:
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<std::vector<int>>& adjacency_lists() const { return adj_; }
    int degree(int v) const { return degrees_[static_cast<size_t>(v)]; }
    int max_degree() const;
    int min_degree() const;
    bool has_edge(int u, int v) const;

    bool is_connected() const;
    bool is_tree() const;
    bool is_forest() const;

    // Removes v and its incident edges; remaining vertices are reindexed
    // order-preservingly (w > v becomes w-1).
    Graph delete_vertex(int v) const;

private:
    Graph() = default;
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> adj_;
};

enum class RegularityClass { regular, bipartite_semiregular, other };
const char* to_string(RegularityClass c);

// Connected input required. Regular wins when both would apply.
RegularityClass bipartite_regularity_class(const Graph& g);

bool is_bipartite(const Graph& g);

// AHU-style bracket code rooted at the centroid (lexicographically smaller of
// the two codes when the centroid is an edge). Equal codes iff isomorphic.
std::string canonical_code(const Graph& tree);
// Same encoding over raw adjacency lists of a tree; no validation.
std::string canonical_code_adjlists(int n, const std::vector<std::vector<int>>& adj);

// ---- named families ----

Graph path_graph(int n);                 // P_n, n >= 1
Graph star_graph(int n);                 // S_n, n >= 2
Graph cycle_graph(int n);                // C_n, n >= 3
Graph complete_bipartite(int a, int b);  // K_{a,b}, a,b >= 1
Graph tree_t1(int n);                    // n >= 6
Graph tree_t2(int n);                    // n >= 6
Graph tree_t3(int n);                    // n >= 6
Graph tree_t4(int n);                    // n >= 6
Graph tree_t5(int n);                    // n >= 6
Graph snake_z(int n);                    // n >= 5
Graph snake_w(int n);                    // n >= 6
Graph spider(const std::vector<int>& legs);
Graph double_star(int a, int b);  // a,b leaf counts >= 1
Graph smith_h(int i);             // H_1..H_6, fixed orders 6,7,7,8,8,9

struct FamilySpec {
    std::string name;  // P S C K_ab T1..T5 Z W H1..H6 spider double_star
    std::vector<int> params;
};

Graph make_family(const FamilySpec& spec);

// ---- edge-list text format ----
// line 1: "n m"; then m lines "u v" (0-based, single space); '#' starts a
// comment line; LF endings.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);

}  // namespace exspectra
