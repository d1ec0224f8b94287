#include "spectra.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace exspectra {

SpectralResult spectral_radius(const FloatSymMatrix& m, double tol, int max_iter) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be positive");
    const int n = m.order();
    const double* a = m.data().data();

    std::vector<double> x(static_cast<size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(static_cast<size_t>(n), 0.0);

    double rho_prev = 0.0;
    double value = 0.0;
    double residual = 0.0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        // y = (M + I) x
        for (int i = 0; i < n; ++i) {
            double acc = x[static_cast<size_t>(i)];
            const double* row = a + static_cast<size_t>(i) * n;
            for (int j = 0; j < n; ++j) acc += row[j] * x[static_cast<size_t>(j)];
            y[static_cast<size_t>(i)] = acc;
        }
        double rho = 0.0;  // Rayleigh quotient of the shifted matrix
        for (int i = 0; i < n; ++i) rho += x[static_cast<size_t>(i)] * y[static_cast<size_t>(i)];
        // (M+I)x - rho x == M x - (rho-1) x, so this is the residual we report
        residual = 0.0;
        for (int i = 0; i < n; ++i) {
            residual = std::max(residual, std::fabs(y[static_cast<size_t>(i)] - rho * x[static_cast<size_t>(i)]));
        }
        value = rho - 1.0;
        double scale = std::max(1.0, std::fabs(value));
        if (residual <= tol * scale && std::fabs(rho - rho_prev) <= tol * scale) {
            double norm = 0.0;
            for (double v : y) norm += v * v;
            norm = std::sqrt(norm);
            for (auto& v : y) v /= norm;
            return SpectralResult{value, y, iter, residual};
        }
        rho_prev = rho;
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] / norm;
    }
    throw ConvergenceError(value, residual, max_iter);
}

Spectrum full_spectrum(const FloatSymMatrix& m, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    const int n = m.order();
    std::vector<double> a(m.data());
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    double fro = 0.0;
    for (double v : a) fro += v * v;
    fro = std::sqrt(fro);
    const double target = tol * std::max(1.0, fro);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
        off = std::sqrt(off);
        if (off < target) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                double app = at(p, p), aqq = at(q, q);
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    Spectrum sp;
    sp.eigenvalues.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) sp.eigenvalues[static_cast<size_t>(i)] = at(i, i);
    std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end(), std::greater<double>());
    return sp;
}

SpectralResult eta1_result(const Graph& g, const SolveOptions& opts) {
    if (!g.is_connected()) throw DisconnectedError("eta1 requires a connected graph");
    return spectral_radius(FloatSymMatrix::from(extended_adjacency(g)), opts.tol, opts.max_iter);
}

SpectralResult lambda1_result(const Graph& g, const SolveOptions& opts) {
    if (!g.is_connected()) throw DisconnectedError("lambda1 requires a connected graph");
    return spectral_radius(FloatSymMatrix::from(adjacency(g)), opts.tol, opts.max_iter);
}

double eta1(const Graph& g, const SolveOptions& opts) { return eta1_result(g, opts).value; }

double lambda1(const Graph& g, const SolveOptions& opts) { return lambda1_result(g, opts).value; }

double extended_energy(const Graph& g, const SolveOptions& opts) {
    Spectrum sp = full_spectrum(FloatSymMatrix::from(extended_adjacency(g)), opts.tol);
    double acc = 0.0;
    for (double v : sp.eigenvalues) acc += std::fabs(v);
    return acc;
}

}  // namespace exspectra
