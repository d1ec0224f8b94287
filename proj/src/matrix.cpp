#include "matrix.hpp"

#include <stdexcept>

#include "errors.hpp"

namespace exspectra {

RationalSymMatrix::RationalSymMatrix(int order)
    : n_(order), a_(static_cast<size_t>(order) * static_cast<size_t>(order), Rational(0)) {
    if (order < 1) throw std::invalid_argument("matrix order must be positive");
}

void RationalSymMatrix::set(int i, int j, const Rational& value) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::invalid_argument("matrix index out of range");
    if (i == j) throw std::invalid_argument("diagonal entries are fixed at zero");
    a_[idx(i, j)] = value;
    a_[idx(j, i)] = value;
}

Rational RationalSymMatrix::trace_of_square() const {
    Rational acc = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            acc += at(i, j) * at(j, i);
        }
    }
    return acc;
}

std::string RationalSymMatrix::to_json() const {
    std::string out = "[";
    for (int i = 0; i < n_; ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < n_; ++j) {
            if (j) out += ",";
            out += "\"" + to_string(at(i, j)) + "\"";
        }
        out += "]";
    }
    out += "]";
    return out;
}

FloatSymMatrix FloatSymMatrix::from(const RationalSymMatrix& m) {
    FloatSymMatrix f(m.order());
    for (int i = 0; i < m.order(); ++i) {
        for (int j = i + 1; j < m.order(); ++j) {
            f.set(i, j, to_double(m.at(i, j)));
        }
    }
    return f;
}

Rational weight(long du, long dv) {
    if (du < 1 || dv < 1) {
        throw std::invalid_argument("edge weight requires positive degrees");
    }
    return make_rational(du * du + dv * dv, 2 * du * dv);
}

RationalSymMatrix adjacency(const Graph& g) {
    RationalSymMatrix m(g.order());
    for (auto [u, v] : g.edges()) m.set(u, v, 1);
    return m;
}

RationalSymMatrix extended_adjacency(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) throw IsolatedVertexError(v);
    }
    RationalSymMatrix m(g.order());
    for (auto [u, v] : g.edges()) {
        m.set(u, v, weight(g.degree(u), g.degree(v)));
    }
    return m;
}

long long first_zagreb(const Graph& g) {
    long long acc = 0;
    for (int d : g.degrees()) acc += static_cast<long long>(d) * d;
    return acc;
}

long long forgotten(const Graph& g) {
    long long acc = 0;
    for (int d : g.degrees()) acc += static_cast<long long>(d) * d * d;
    return acc;
}

Rational eta_lower_bound_fm1(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) throw IsolatedVertexError(v);
    }
    return make_rational(forgotten(g), first_zagreb(g));
}

std::pair<double, double> eta_sandwich(const Graph& g, double lambda1) {
    double w = to_double(weight(g.max_degree(), g.min_degree()));
    return {lambda1, w * lambda1};
}

}  // namespace exspectra
