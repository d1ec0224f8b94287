#pragma once

#include <vector>

#include "graph.hpp"
#include "matrix.hpp"

namespace exspectra {

struct SolveOptions {
    double tol = 1e-12;
    int max_iter = 100000;
    int jobs = 0;  // 0 = hardware concurrency
};

struct SpectralResult {
    double value = 0.0;
    std::vector<double> vector;  // unit Euclidean norm
    int iterations = 0;
    double residual = 0.0;  // inf-norm of M x - value x
};

// Largest eigenvalue of a nonnegative symmetric matrix by power iteration on
// M + I (primitive for irreducible M, so the bipartite +/- pairing cannot trap
// the iterate), started from the all-ones vector. Stops when the Rayleigh
// delta and the relative residual both drop below tol. Throws ConvergenceError
// with the best iterate after max_iter.
SpectralResult spectral_radius(const FloatSymMatrix& m, double tol, int max_iter);

struct Spectrum {
    std::vector<double> eigenvalues;  // descending
};

// All eigenvalues by cyclic Jacobi rotations; off-diagonal Frobenius norm is
// driven below tol (relative to the matrix norm). tol <= 0 rejected.
Spectrum full_spectrum(const FloatSymMatrix& m, double tol);

// Extended spectral radius; requires a connected graph.
double eta1(const Graph& g, const SolveOptions& opts = {});
// Ordinary spectral radius; requires a connected graph.
double lambda1(const Graph& g, const SolveOptions& opts = {});
// Sum of |eigenvalue| over the extended adjacency spectrum; min degree >= 1.
double extended_energy(const Graph& g, const SolveOptions& opts = {});

SpectralResult eta1_result(const Graph& g, const SolveOptions& opts = {});
SpectralResult lambda1_result(const Graph& g, const SolveOptions& opts = {});

}  // namespace exspectra
