#include "graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace exspectra {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for n=" + std::to_string(n));
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    g.degrees_.assign(static_cast<size_t>(n), 0);
    g.adj_.assign(static_cast<size_t>(n), {});
    for (auto [u, v] : g.edges_) {
        ++g.degrees_[static_cast<size_t>(u)];
        ++g.degrees_[static_cast<size_t>(v)];
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    return g;
}

int Graph::max_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }
int Graph::min_degree() const { return *std::min_element(degrees_.begin(), degrees_.end()); }

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[static_cast<size_t>(v)]) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

bool Graph::is_tree() const { return is_connected() && size() == n_ - 1; }

bool Graph::is_forest() const {
    // acyclic <=> every component has |E| = |V| - 1; count components once
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    int components = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        ++components;
        stack.push_back(s);
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[static_cast<size_t>(v)]) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return size() == n_ - components;
}

Graph Graph::delete_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    if (n_ == 1) throw std::invalid_argument("cannot delete the last vertex");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges_.size());
    for (auto [a, b] : edges_) {
        if (a == v || b == v) continue;
        pairs.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return from_edge_list(n_ - 1, pairs);
}

const char* to_string(RegularityClass c) {
    switch (c) {
        case RegularityClass::regular: return "regular";
        case RegularityClass::bipartite_semiregular: return "bipartite_semiregular";
        case RegularityClass::other: return "other";
    }
    return "other";
}

namespace {

// 2-coloring; empty result when an odd cycle exists
bool two_color(const Graph& g, std::vector<int>& color) {
    color.assign(static_cast<size_t>(g.order()), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adjacency_lists()[static_cast<size_t>(v)]) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

bool is_bipartite(const Graph& g) {
    std::vector<int> color;
    return two_color(g, color);
}

RegularityClass bipartite_regularity_class(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedError("regularity class requires a connected graph");
    int dmin = g.min_degree(), dmax = g.max_degree();
    if (dmin == dmax) return RegularityClass::regular;
    std::vector<int> color;
    if (!two_color(g, color)) return RegularityClass::other;
    int side_degree[2] = {-1, -1};
    for (int v = 0; v < g.order(); ++v) {
        int c = color[static_cast<size_t>(v)];
        if (side_degree[c] == -1) side_degree[c] = g.degree(v);
        else if (side_degree[c] != g.degree(v)) return RegularityClass::other;
    }
    return RegularityClass::bipartite_semiregular;
}

std::string canonical_code_adjlists(int n, const std::vector<std::vector<int>>& adj) {
    if (n == 1) return "()";
    // subtree sizes from an arbitrary root, iterative post-order
    std::vector<int> parent(static_cast<size_t>(n), -1), order;
    order.reserve(static_cast<size_t>(n));
    {
        std::vector<int> stack{0};
        parent[0] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int w : adj[static_cast<size_t>(v)]) {
                if (parent[static_cast<size_t>(w)] == -1) {
                    parent[static_cast<size_t>(w)] = v;
                    stack.push_back(w);
                }
            }
        }
    }
    std::vector<int> sz(static_cast<size_t>(n), 1);
    for (size_t i = order.size(); i-- > 1;) {
        sz[static_cast<size_t>(parent[static_cast<size_t>(order[i])])] += sz[static_cast<size_t>(order[i])];
    }
    // centroid(s): minimize the largest component left by removal
    int best = n + 1;
    std::vector<int> centroids;
    for (int v = 0; v < n; ++v) {
        int worst = n - sz[static_cast<size_t>(v)];
        for (int w : adj[static_cast<size_t>(v)]) {
            if (w != v && parent[static_cast<size_t>(w)] == v) {
                worst = std::max(worst, sz[static_cast<size_t>(w)]);
            }
        }
        if (worst < best) {
            best = worst;
            centroids.assign(1, v);
        } else if (worst == best) {
            centroids.push_back(v);
        }
    }

    std::function<std::string(int, int)> enc = [&](int v, int from) -> std::string {
        std::vector<std::string> kids;
        for (int w : adj[static_cast<size_t>(v)]) {
            if (w != from) kids.push_back(enc(w, v));
        }
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        s += ")";
        return s;
    };

    std::string code = enc(centroids[0], -1);
    for (size_t i = 1; i < centroids.size(); ++i) {
        std::string other = enc(centroids[i], -1);
        if (other < code) code = std::move(other);
    }
    return code;
}

std::string canonical_code(const Graph& tree) {
    if (!tree.is_tree()) throw NotATreeError("canonical code requires a tree");
    return canonical_code_adjlists(tree.order(), tree.adjacency_lists());
}

// ---- families ----

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("P_n requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

Graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("S_n requires n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph::from_edge_list(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("C_n requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("K_{a,b} requires a,b >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edge_list(a + b, e);
}

Graph tree_t1(int n) {
    if (n < 6) throw std::invalid_argument("T1 requires n >= 6");
    // center 0 with n-3 leaves, plus the pendant path 0-(n-2)-(n-1)
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n - 3; ++i) e.emplace_back(0, i);
    e.emplace_back(0, n - 2);
    e.emplace_back(n - 2, n - 1);
    return Graph::from_edge_list(n, e);
}

Graph tree_t2(int n) {
    if (n < 6) throw std::invalid_argument("T2 requires n >= 6");
    // center 0 with n-4 leaves, plus the pendant path 0-(n-3)-(n-2)-(n-1)
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n - 4; ++i) e.emplace_back(0, i);
    e.emplace_back(0, n - 3);
    e.emplace_back(n - 3, n - 2);
    e.emplace_back(n - 2, n - 1);
    return Graph::from_edge_list(n, e);
}

Graph tree_t3(int n) {
    if (n < 6) throw std::invalid_argument("T3 requires n >= 6");
    // center 0 with n-4 leaves, adjacent to n-3 which carries leaves n-2, n-1
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n - 4; ++i) e.emplace_back(0, i);
    e.emplace_back(0, n - 3);
    e.emplace_back(n - 3, n - 2);
    e.emplace_back(n - 3, n - 1);
    return Graph::from_edge_list(n, e);
}

Graph tree_t4(int n) {
    if (n < 6) throw std::invalid_argument("T4 requires n >= 6");
    // center 0 with n-5 leaves and two degree-2 arms 0-(n-4)-(n-2), 0-(n-3)-(n-1)
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n - 5; ++i) e.emplace_back(0, i);
    e.emplace_back(0, n - 4);
    e.emplace_back(0, n - 3);
    e.emplace_back(n - 4, n - 2);
    e.emplace_back(n - 3, n - 1);
    return Graph::from_edge_list(n, e);
}

Graph tree_t5(int n) {
    if (n < 6) throw std::invalid_argument("T5 requires n >= 6");
    // adjacent centers of degrees n-4 and 4: n-5 leaves on 0, three on 1
    return double_star(n - 5, 3);
}

Graph snake_z(int n) {
    if (n < 5) throw std::invalid_argument("Z requires n >= 5");
    // path on n-1 vertices with one extra leaf on the second vertex
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n - 1; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n - 1);
    return Graph::from_edge_list(n, e);
}

Graph snake_w(int n) {
    if (n < 6) throw std::invalid_argument("W requires n >= 6");
    // path on n-2 vertices with extra leaves on the second and second-to-last
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n - 2; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n - 2);
    e.emplace_back(n - 4, n - 1);
    return Graph::from_edge_list(n, e);
}

Graph spider(const std::vector<int>& legs) {
    if (legs.empty()) throw std::invalid_argument("spider requires at least one leg");
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int len : legs) {
        if (len < 1) throw std::invalid_argument("spider leg length must be >= 1");
        int prev = 0;
        for (int k = 0; k < len; ++k) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edge_list(next, e);
}

Graph double_star(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("double star requires leaf counts >= 1");
    std::vector<std::pair<int, int>> e;
    e.emplace_back(0, 1);
    int next = 2;
    for (int i = 0; i < a; ++i) e.emplace_back(0, next++);
    for (int i = 0; i < b; ++i) e.emplace_back(1, next++);
    return Graph::from_edge_list(next, e);
}

Graph smith_h(int i) {
    switch (i) {
        case 1: return spider({1, 2, 2});
        case 2: return spider({1, 2, 3});
        case 3: return spider({2, 2, 2});
        case 4: return spider({1, 2, 4});
        case 5: return spider({1, 3, 3});
        case 6: return spider({1, 2, 5});
    }
    throw std::invalid_argument("H_i requires 1 <= i <= 6");
}

Graph make_family(const FamilySpec& spec) {
    const auto& name = spec.name;
    const auto& p = spec.params;
    auto need = [&](size_t k) {
        if (p.size() != k) {
            throw std::invalid_argument("family " + name + " takes " + std::to_string(k) +
                                        " parameter(s), got " + std::to_string(p.size()));
        }
    };
    if (name == "P") { need(1); return path_graph(p[0]); }
    if (name == "S") { need(1); return star_graph(p[0]); }
    if (name == "C") { need(1); return cycle_graph(p[0]); }
    if (name == "K_ab") { need(2); return complete_bipartite(p[0], p[1]); }
    if (name == "T1") { need(1); return tree_t1(p[0]); }
    if (name == "T2") { need(1); return tree_t2(p[0]); }
    if (name == "T3") { need(1); return tree_t3(p[0]); }
    if (name == "T4") { need(1); return tree_t4(p[0]); }
    if (name == "T5") { need(1); return tree_t5(p[0]); }
    if (name == "Z") { need(1); return snake_z(p[0]); }
    if (name == "W") { need(1); return snake_w(p[0]); }
    if (name.size() == 2 && name[0] == 'H' && name[1] >= '1' && name[1] <= '6') {
        need(0);
        return smith_h(name[1] - '0');
    }
    if (name == "spider") {
        if (p.empty()) throw std::invalid_argument("spider requires leg lengths");
        return spider(p);
    }
    if (name == "double_star") { need(2); return double_star(p[0], p[1]); }
    throw std::invalid_argument("unknown family '" + name + "'");
}

// ---- edge-list IO ----

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> pairs;
    long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 1 || m < 0) throw ParseError(lineno, "expected header 'n m'");
        } else {
            long u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "expected edge 'u v'");
            if (seen >= m) throw ParseError(lineno, "more edges than declared");
            pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
            ++seen;
        }
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens '" + extra + "'");
    }
    if (n < 0) throw ParseError(lineno, "missing header 'n m'");
    if (seen != m) throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " + std::to_string(seen));
    try {
        return Graph::from_edge_list(static_cast<int>(n), pairs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

}  // namespace exspectra
