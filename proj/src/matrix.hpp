#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace exspectra {

// Dense symmetric matrix over exact rationals with zero diagonal.
class RationalSymMatrix {
public:
    explicit RationalSymMatrix(int order);

    int order() const { return n_; }
    const Rational& at(int i, int j) const { return a_[idx(i, j)]; }
    // sets both (i,j) and (j,i); i == j rejected
    void set(int i, int j, const Rational& value);

    Rational trace_of_square() const;
    bool operator==(const RationalSymMatrix& rhs) const { return n_ == rhs.n_ && a_ == rhs.a_; }

    // array of rows, each an array of "p/q" strings
    std::string to_json() const;

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j); }
    int n_;
    std::vector<Rational> a_;
};

// Floating-point view, produced at the eigensolver boundary by nearest rounding.
class FloatSymMatrix {
public:
    explicit FloatSymMatrix(int order) : n_(order), a_(static_cast<size_t>(order) * order, 0.0) {}
    static FloatSymMatrix from(const RationalSymMatrix& m);

    int order() const { return n_; }
    double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, double value) {
        a_[static_cast<size_t>(i) * n_ + j] = value;
        a_[static_cast<size_t>(j) * n_ + i] = value;
    }
    const std::vector<double>& data() const { return a_; }

private:
    int n_;
    std::vector<double> a_;
};

// (d_u^2 + d_v^2) / (2 d_u d_v), reduced; >= 1 with equality iff d_u == d_v.
Rational weight(long du, long dv);

RationalSymMatrix adjacency(const Graph& g);
// requires min degree >= 1
RationalSymMatrix extended_adjacency(const Graph& g);

long long first_zagreb(const Graph& g);  // sum of squared degrees
long long forgotten(const Graph& g);     // sum of cubed degrees

// F(G)/M_1(G), reduced; requires min degree >= 1
Rational eta_lower_bound_fm1(const Graph& g);

// (lambda1, weight(max_degree, min_degree) * lambda1) in floating point
std::pair<double, double> eta_sandwich(const Graph& g, double lambda1);

}  // namespace exspectra
