#pragma once

#include <vector>

#include "graph.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace exspectra {

// Monic characteristic polynomial det(xI - M) over exact rationals
// (Faddeev-LeVerrier trace recursion).
Polynomial charpoly_oracle(const RationalSymMatrix& m);

// Forest with per-vertex ambient degrees: the degree each vertex has in the
// surrounding graph the forest was cut from. Off-diagonal entries of the
// induced principal submatrix use the ambient degrees, which generally differ
// from the forest's own degrees.
struct DegreeLabeledForest {
    Graph forest;
    std::vector<int> ambient_degree;

    static DegreeLabeledForest from_tree(const Graph& tree);
    void validate() const;
};

// Principal submatrix carrier: induced subgraph on `vertices` (must be
// acyclic) with ambient degrees taken from g.
DegreeLabeledForest principal_subforest(const Graph& g, const std::vector<int>& vertices);

// Characteristic polynomial of the ambient principal submatrix, by recursive
// edge removal: components multiply; an edge uv contributes
// phi(F1) phi(F2) - w(d_u,d_v)^2 phi(F1-u) phi(F2-v).
Polynomial charpoly_forest(const DegreeLabeledForest& f);

// phi(A(P_n)) via the three-term recurrence phi_n = x phi_{n-1} - phi_{n-2}.
Polynomial path_adjacency_charpoly(int n);

// x^2 phi(A(P_{n-2})) - 2x(5/4)^2 phi(A(P_{n-3})) + (5/4)^4 phi(A(P_{n-4})),
// n >= 5; equals phi(A_ex(P_n)) identically.
Polynomial extended_path_charpoly_expansion(int n);

// phi(A_ex(P_n)) by the tridiagonal determinant recurrence (exact, O(n^2)).
Polynomial extended_path_charpoly(int n);

// Closed-form quartic/sextic factors: phi(A_ex(T2)) = x^{n-4} g2,
// phi(A_ex(T3)) = x^{n-4} g3, phi(A_ex(T4)) = x^{n-6} g4.
Polynomial g2(int n);  // n >= 7
Polynomial g3(int n);  // n >= 7
Polynomial g4(int n);  // n >= 8

// 1 + max |c_i / c_d|; exceeds every real root.
Rational cauchy_root_bound(const Polynomial& p);

// 1 + max absolute row sum; exceeds every eigenvalue and is far tighter than
// the coefficient bound for characteristic polynomials.
Rational max_row_sum_bound(const RationalSymMatrix& m);

// Largest real root located from above by exact rational sign evaluation:
// a downward scan brackets the topmost sign change, then bisection to tol.
// Throws when no sign change exists in [lo, hi].
double largest_root(const Polynomial& p, const Rational& lo, const Rational& hi, double tol);
// Convenience: lo = 0, hi = cauchy bound.
double largest_root(const Polynomial& p, double tol);

// Fixed octic f and its derivative displays, k = 0 (f itself) .. 8.
const Polynomial& appendix_poly(int k);
Rational appendix_f(const Rational& x);
Rational appendix_derivative(int k, const Rational& x);

// (n-3)sqrt(n-5)/2 > (n-4+1/(n-4))/2 * sqrt((n-1+sqrt(n^2-14n+61))/2) for
// n >= 12; floating-point evaluation guarded by the exact integer route
// 4(n-5) f(n) > 0. True only when both routes agree.
bool appendix_inequality_check(long n);

}  // namespace exspectra
