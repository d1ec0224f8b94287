#include "charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "errors.hpp"

namespace exspectra {

Polynomial charpoly_oracle(const RationalSymMatrix& m) {
    const int n = m.order();
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_k = A(M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    std::vector<Rational> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m.at(i, j);

    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
    coeffs[static_cast<size_t>(n)] = 1;

    std::vector<Rational> work = a;
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += work[static_cast<size_t>(i) * n + i];
    coeffs[static_cast<size_t>(n - 1)] = -tr;

    std::vector<Rational> next(static_cast<size_t>(n) * n);
    for (int k = 2; k <= n; ++k) {
        const Rational& shift = coeffs[static_cast<size_t>(n - k + 1)];
        for (int i = 0; i < n; ++i) work[static_cast<size_t>(i) * n + i] += shift;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Rational acc = 0;
                for (int l = 0; l < n; ++l) {
                    const Rational& ail = a[static_cast<size_t>(i) * n + l];
                    if (ail == 0) continue;
                    acc += ail * work[static_cast<size_t>(l) * n + j];
                }
                next[static_cast<size_t>(i) * n + j] = acc;
            }
        }
        work.swap(next);
        tr = 0;
        for (int i = 0; i < n; ++i) tr += work[static_cast<size_t>(i) * n + i];
        coeffs[static_cast<size_t>(n - k)] = -tr / Rational(k);
    }
    return Polynomial(std::move(coeffs));
}

DegreeLabeledForest DegreeLabeledForest::from_tree(const Graph& tree) {
    if (!tree.is_tree()) throw NotATreeError("expected a tree");
    DegreeLabeledForest f{tree, tree.degrees()};
    f.validate();
    return f;
}

void DegreeLabeledForest::validate() const {
    if (!forest.is_forest()) throw std::invalid_argument("labeled forest must be acyclic");
    if (static_cast<int>(ambient_degree.size()) != forest.order()) {
        throw std::invalid_argument("ambient degree label count mismatch");
    }
    for (int v = 0; v < forest.order(); ++v) {
        if (ambient_degree[static_cast<size_t>(v)] < 1) {
            throw std::invalid_argument("ambient degree must be positive at vertex " + std::to_string(v));
        }
        if (ambient_degree[static_cast<size_t>(v)] < forest.degree(v)) {
            throw std::invalid_argument("ambient degree below forest degree at vertex " + std::to_string(v));
        }
    }
}

DegreeLabeledForest principal_subforest(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> remap(static_cast<size_t>(g.order()), -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.order()) throw std::invalid_argument("subforest vertex out of range");
        if (remap[static_cast<size_t>(v)] != -1) throw std::invalid_argument("duplicate subforest vertex");
        remap[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        if (remap[static_cast<size_t>(u)] != -1 && remap[static_cast<size_t>(v)] != -1) {
            edges.emplace_back(remap[static_cast<size_t>(u)], remap[static_cast<size_t>(v)]);
        }
    }
    DegreeLabeledForest f{Graph::from_edge_list(static_cast<int>(vertices.size()), edges), {}};
    f.ambient_degree.reserve(vertices.size());
    for (int v : vertices) f.ambient_degree.push_back(g.degree(v));
    f.validate();
    return f;
}

namespace {

struct ForestCtx {
    const std::vector<std::vector<int>>& adj;
    const std::vector<int>& label;
};

Polynomial phi_forest(const ForestCtx& ctx, uint64_t alive);

// alive component containing at least one vertex
Polynomial phi_component(const ForestCtx& ctx, uint64_t comp) {
    if ((comp & (comp - 1)) == 0) return Polynomial::x();  // single vertex
    // find a leaf within the component
    int leaf = -1, parent = -1;
    for (int v = 0; v < 64 && leaf < 0; ++v) {
        if (!(comp >> v & 1)) continue;
        int deg = 0, nb = -1;
        for (int w : ctx.adj[static_cast<size_t>(v)]) {
            if (comp >> w & 1) {
                ++deg;
                nb = w;
            }
        }
        if (deg == 1) {
            leaf = v;
            parent = nb;
        }
    }
    uint64_t without_leaf = comp & ~(uint64_t(1) << leaf);
    uint64_t without_both = without_leaf & ~(uint64_t(1) << parent);
    Rational w = weight(ctx.label[static_cast<size_t>(leaf)], ctx.label[static_cast<size_t>(parent)]);
    Polynomial a = phi_component(ctx, without_leaf) * Polynomial::x();
    Polynomial b = phi_forest(ctx, without_both) * (w * w);
    return a - b;
}

Polynomial phi_forest(const ForestCtx& ctx, uint64_t alive) {
    Polynomial result = Polynomial::constant(1);
    uint64_t remaining = alive;
    while (remaining) {
        int seed = __builtin_ctzll(remaining);
        uint64_t comp = uint64_t(1) << seed;
        std::vector<int> stack{seed};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : ctx.adj[static_cast<size_t>(v)]) {
                if ((alive >> w & 1) && !(comp >> w & 1)) {
                    comp |= uint64_t(1) << w;
                    stack.push_back(w);
                }
            }
        }
        result = result * phi_component(ctx, comp);
        remaining &= ~comp;
    }
    return result;
}

}  // namespace

Polynomial charpoly_forest(const DegreeLabeledForest& f) {
    f.validate();
    const int n = f.forest.order();
    if (n > 63) throw std::invalid_argument("forest recursion supports at most 63 vertices");
    ForestCtx ctx{f.forest.adjacency_lists(), f.ambient_degree};
    uint64_t alive = n == 63 ? ~uint64_t(0) >> 1 : (uint64_t(1) << n) - 1;
    return phi_forest(ctx, alive);
}

Polynomial path_adjacency_charpoly(int n) {
    if (n < 1) throw std::invalid_argument("path charpoly requires n >= 1");
    Polynomial prev = Polynomial::x();  // phi(P_1)
    if (n == 1) return prev;
    Polynomial cur(std::vector<Rational>{-1, 0, 1});  // phi(P_2) = x^2 - 1
    for (int k = 3; k <= n; ++k) {
        Polynomial next = cur * Polynomial::x() - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial extended_path_charpoly_expansion(int n) {
    if (n < 5) throw std::invalid_argument("expansion requires n >= 5");
    Rational w2 = make_rational(25, 16);  // (5/4)^2
    Polynomial x = Polynomial::x();
    return x * x * path_adjacency_charpoly(n - 2) -
           x * (w2 * 2) * path_adjacency_charpoly(n - 3) +
           path_adjacency_charpoly(n - 4) * (w2 * w2);
}

Polynomial extended_path_charpoly(int n) {
    if (n < 2) throw std::invalid_argument("extended path charpoly requires n >= 2");
    // leading principal minors of xI - A_ex(P_n)
    auto path_degree = [n](int v) { return (v == 0 || v == n - 1) ? 1 : 2; };
    Polynomial prev2 = Polynomial::constant(1);
    Polynomial prev = Polynomial::x();
    for (int k = 2; k <= n; ++k) {
        Rational w = weight(path_degree(k - 2), path_degree(k - 1));
        Polynomial cur = prev * Polynomial::x() - prev2 * (w * w);
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

namespace {

// (x^2 - (m)[(n-3)^2+1]^2 / (4(n-3)^2)) with m = n-4 or n-5
Polynomial big_quadratic(long n, long m) {
    Rational s = make_rational((n - 3) * (n - 3) + 1);
    Rational c = s * s * Rational(m) / make_rational(4 * (n - 3) * (n - 3));
    return Polynomial(std::vector<Rational>{-c, 0, 1});
}

Polynomial x2_minus(const Rational& c) { return Polynomial(std::vector<Rational>{-c, 0, 1}); }

}  // namespace

Polynomial g2(int n) {
    if (n < 7) throw std::invalid_argument("g2 requires n >= 7");
    Rational t = make_rational((static_cast<long>(n) - 3) * (n - 3) + 4);
    Rational coef = t * t / make_rational(16L * (n - 3) * (n - 3));
    return big_quadratic(n, n - 4) * x2_minus(make_rational(41, 16)) -
           x2_minus(make_rational(25, 16)) * coef;
}

Polynomial g3(int n) {
    if (n < 7) throw std::invalid_argument("g3 requires n >= 7");
    Rational t = make_rational((static_cast<long>(n) - 3) * (n - 3) + 9);
    Rational coef = t * t / make_rational(36L * (n - 3) * (n - 3));
    return big_quadratic(n, n - 4) * x2_minus(make_rational(50, 9)) -
           Polynomial::monomial(2, coef);
}

Polynomial g4(int n) {
    if (n < 8) throw std::invalid_argument("g4 requires n >= 8");
    Rational t = make_rational((static_cast<long>(n) - 3) * (n - 3) + 4);
    Rational coef = t * t / make_rational(8L * (n - 3) * (n - 3));
    Polynomial q = x2_minus(make_rational(25, 16));
    return big_quadratic(n, n - 5) * q * q - Polynomial::monomial(2, coef) * q;
}

Rational cauchy_root_bound(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no root bound");
    const Rational& lead = p.coeff(p.degree());
    Rational best = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coeff(i) / lead);
        if (r > best) best = r;
    }
    return best + 1;
}

Rational max_row_sum_bound(const RationalSymMatrix& m) {
    Rational best = 0;
    for (int i = 0; i < m.order(); ++i) {
        Rational row = 0;
        for (int j = 0; j < m.order(); ++j) row += abs(m.at(i, j));
        if (row > best) best = row;
    }
    return best + 1;
}

double largest_root(const Polynomial& p, const Rational& lo, const Rational& hi, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (!(lo < hi)) throw std::invalid_argument("empty root interval");
    if (p.degree() < 1) throw std::invalid_argument("constant polynomial has no root");

    Rational phi_val = p.eval(hi);
    if (phi_val == 0) return to_double(hi);
    const int top_sign = phi_val > 0 ? 1 : -1;

    // bracket the topmost sign change, scanning down from hi
    Rational a, b;
    bool bracketed = false;
    const int kSteps = 4096;
    Rational step = (hi - lo) / kSteps;
    Rational upper = hi;
    for (int k = 1; k <= kSteps && !bracketed; ++k) {
        Rational x = hi - step * k;
        if (k == kSteps) x = lo;
        Rational v = p.eval(x);
        if (v == 0 || (v > 0 ? 1 : -1) != top_sign) {
            a = x;
            b = upper;
            bracketed = true;
        }
        upper = x;
    }
    if (!bracketed) {
        throw std::runtime_error("no sign change detected in the given interval");
    }

    while (to_double(b - a) > tol) {
        Rational mid = (a + b) / 2;
        Rational v = p.eval(mid);
        if (v == 0) return to_double(mid);
        if ((v > 0 ? 1 : -1) == top_sign) b = mid;
        else a = mid;
    }
    return to_double((a + b) / 2);
}

double largest_root(const Polynomial& p, double tol) {
    return largest_root(p, Rational(0), cauchy_root_bound(p), tol);
}

const Polynomial& appendix_poly(int k) {
    static const std::vector<Polynomial> table = [] {
        auto mk = [](std::vector<long> ascending) {
            std::vector<Rational> c;
            c.reserve(ascending.size());
            for (long v : ascending) c.emplace_back(v);
            return Polynomial(std::move(c));
        };
        std::vector<Polynomial> t;
        t.push_back(mk({188499, -338328, 265885, -119207, 33246, -5882, 641, -39, 1}));
        t.push_back(mk({-338328, 531770, -357621, 132984, -29410, 3846, -273, 8}));
        t.push_back(mk({531770, -715242, 398952, -117640, 19230, -1638, 56}));
        t.push_back(mk({-715242, 797904, -352920, 76920, -8190, 336}));
        t.push_back(mk({797904, -705840, 230760, -32760, 1680}));
        t.push_back(mk({-705840, 461520, -98280, 6720}));
        t.push_back(mk({461520, -196560, 20160}));
        t.push_back(mk({-196560, 40320}));
        t.push_back(mk({40320}));
        return t;
    }();
    if (k < 0 || k > 8) throw std::invalid_argument("derivative order must be in 0..8");
    return table[static_cast<size_t>(k)];
}

Rational appendix_f(const Rational& x) { return appendix_poly(0).eval(x); }

Rational appendix_derivative(int k, const Rational& x) { return appendix_poly(k).eval(x); }

bool appendix_inequality_check(long n) {
    if (n < 12) throw std::invalid_argument("inequality check requires n >= 12");
    double nd = static_cast<double>(n);
    double lhs = 0.5 * (nd - 3) * std::sqrt(nd - 5);
    double rhs = 0.5 * (nd - 4 + 1.0 / (nd - 4)) *
                 std::sqrt(0.5 * (nd - 1 + std::sqrt(nd * nd - 14 * nd + 61)));
    bool float_route = lhs > rhs;
    bool exact_route = Rational(4 * (n - 5)) * appendix_f(Rational(n)) > 0;
    return float_route && exact_route;
}

}  // namespace exspectra
