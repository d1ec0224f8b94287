#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "errors.hpp"
#include "matrix.hpp"
#include "spectra.hpp"
#include "test_util.hpp"

using namespace exspectra;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("spectral radius reference values") {
    SpectralResult c9 = spectral_radius(FloatSymMatrix::from(extended_adjacency(cycle_graph(9))),
                                        1e-12, 100000);
    CHECK(c9.value == doctest::Approx(2.0).epsilon(1e-10));

    SpectralResult s10 =
        spectral_radius(FloatSymMatrix::from(adjacency(star_graph(10))), 1e-12, 100000);
    CHECK(s10.value == doctest::Approx(3.0).epsilon(1e-10));

    SpectralResult p3 = spectral_radius(FloatSymMatrix::from(extended_adjacency(path_graph(3))),
                                        1e-12, 100000);
    CHECK(p3.value == doctest::Approx(std::sqrt(25.0 / 8.0)).epsilon(1e-10));
}

TEST_CASE("spectral result contract") {
    Graph t = tree_t2(9);
    SpectralResult r = spectral_radius(FloatSymMatrix::from(extended_adjacency(t)), 1e-12, 100000);
    CHECK(r.residual <= 1e-12 * std::max(1.0, r.value));
    double norm = 0.0;
    for (double v : r.vector) {
        CHECK(v > 0.0);  // Perron vector of a connected graph
        norm += v * v;
    }
    CHECK(std::fabs(std::sqrt(norm) - 1.0) < 1e-12);
    CHECK(r.iterations >= 1);

    // residual definition: |M x - value x|_inf
    FloatSymMatrix m = FloatSymMatrix::from(extended_adjacency(t));
    double worst = 0.0;
    for (int i = 0; i < m.order(); ++i) {
        double acc = 0.0;
        for (int j = 0; j < m.order(); ++j) acc += m.at(i, j) * r.vector[j];
        worst = std::max(worst, std::fabs(acc - r.value * r.vector[i]));
    }
    CHECK(worst == doctest::Approx(r.residual).epsilon(1e-6));
}

TEST_CASE("non-convergence carries best iterate") {
    FloatSymMatrix m = FloatSymMatrix::from(adjacency(path_graph(6)));
    CHECK_THROWS_AS(spectral_radius(m, 1e-14, 2), ConvergenceError);
    try {
        spectral_radius(m, 1e-14, 2);
    } catch (const ConvergenceError& e) {
        CHECK(e.iterations == 2);
        CHECK(e.best_value > 0.0);
        CHECK(e.residual > 0.0);
    }
    CHECK_THROWS_AS(spectral_radius(m, -1.0, 10), std::invalid_argument);
}

TEST_CASE("relabeling invariance of the radius") {
    testutil::Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + rng.below(9);
        Graph t = testutil::random_tree(n, rng);
        Graph r = testutil::relabel(t, testutil::random_permutation(n, rng));
        CHECK(eta1(t) == doctest::Approx(eta1(r)).epsilon(1e-10));
    }
}

TEST_CASE("full spectrum basics") {
    Spectrum p2 = full_spectrum(FloatSymMatrix::from(adjacency(path_graph(2))), 1e-12);
    REQUIRE(p2.eigenvalues.size() == 2);
    CHECK(p2.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(p2.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-10));

    Spectrum c4 = full_spectrum(FloatSymMatrix::from(adjacency(cycle_graph(4))), 1e-12);
    REQUIRE(c4.eigenvalues.size() == 4);
    CHECK(c4.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(c4.eigenvalues[1] == doctest::Approx(0.0).scale(1));
    CHECK(c4.eigenvalues[2] == doctest::Approx(0.0).scale(1));
    CHECK(c4.eigenvalues[3] == doctest::Approx(-2.0).epsilon(1e-9));

    double scaled = std::sqrt(3.0) * 5.0 / 3.0;
    Spectrum s4 = full_spectrum(FloatSymMatrix::from(extended_adjacency(star_graph(4))), 1e-12);
    CHECK(s4.eigenvalues.front() == doctest::Approx(scaled).epsilon(1e-9));
    CHECK(s4.eigenvalues.back() == doctest::Approx(-scaled).epsilon(1e-9));

    CHECK_THROWS_AS(full_spectrum(FloatSymMatrix(2), 0.0), std::invalid_argument);
}

TEST_CASE("spectrum sums and agreement with the power method") {
    testutil::Rng rng;
    for (int trial = 0; trial < 15; ++trial) {
        int n = 3 + rng.below(10);
        Graph t = testutil::random_tree(n, rng);
        FloatSymMatrix m = FloatSymMatrix::from(extended_adjacency(t));
        Spectrum sp = full_spectrum(m, 1e-12);

        double sum = 0.0, sumsq = 0.0;
        for (double v : sp.eigenvalues) {
            sum += v;
            sumsq += v * v;
        }
        double trace_sq = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) trace_sq += m.at(i, j) * m.at(i, j);
        CHECK(std::fabs(sum) < 1e-8);
        CHECK(std::fabs(sumsq - trace_sq) < 1e-6 * trace_sq);

        double power = spectral_radius(m, 1e-12, 100000).value;
        CHECK(power == doctest::Approx(sp.eigenvalues.front()).epsilon(1e-8));
    }
}

TEST_CASE("eta1 and lambda1 reference values") {
    CHECK(lambda1(path_graph(4)) == doctest::Approx(2.0 * std::cos(kPi / 5)).epsilon(1e-10));
    CHECK(eta1(star_graph(5)) == doctest::Approx(4.25).epsilon(1e-10));
    CHECK(eta1(complete_bipartite(2, 3)) ==
          doctest::Approx(13.0 / (2.0 * std::sqrt(6.0))).epsilon(1e-10));
    CHECK_THROWS_AS(eta1(Graph::from_edge_list(4, {{0, 1}, {2, 3}})), DisconnectedError);
    CHECK_THROWS_AS(lambda1(Graph::from_edge_list(2, {})), DisconnectedError);
}

TEST_CASE("extended energy") {
    CHECK(extended_energy(cycle_graph(6)) == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(extended_energy(star_graph(4)) ==
          doctest::Approx(2.0 * (5.0 / 3.0) * std::sqrt(3.0)).epsilon(1e-9));
    CHECK(extended_energy(path_graph(2)) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK_THROWS_AS(extended_energy(Graph::from_edge_list(2, {})), IsolatedVertexError);
}

TEST_CASE("double star closed form for the ordinary radius") {
    for (int n = 12; n <= 14; ++n) {
        double closed =
            std::sqrt(0.5 * (n - 1 + std::sqrt(static_cast<double>(n) * n - 14.0 * n + 61.0)));
        CHECK(lambda1(tree_t5(n)) == doctest::Approx(closed).epsilon(1e-10));
    }
}

TEST_CASE("radius-at-most-two membership") {
    // snakes and sporadic spiders sit at or below 2; one-sided families stay below
    for (int n = 5; n <= 12; ++n) CHECK(lambda1(snake_z(n)) < 2.0);
    for (int n = 6; n <= 12; ++n) CHECK(lambda1(snake_w(n)) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(lambda1(smith_h(1)) < 2.0);
    CHECK(lambda1(smith_h(2)) < 2.0);
    CHECK(lambda1(smith_h(4)) < 2.0);
    CHECK(lambda1(smith_h(3)) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(lambda1(smith_h(5)) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(lambda1(smith_h(6)) == doctest::Approx(2.0).epsilon(1e-10));
}
