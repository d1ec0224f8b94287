#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "charpoly.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "spectra.hpp"
#include "test_util.hpp"

using namespace exspectra;

namespace {

Polynomial poly(std::vector<Rational> ascending) { return Polynomial(std::move(ascending)); }

}  // namespace

TEST_CASE("charpoly oracle on known matrices") {
    CHECK(charpoly_oracle(adjacency(path_graph(2))) == poly({-1, 0, 1}));
    CHECK(charpoly_oracle(extended_adjacency(path_graph(3))) ==
          poly({0, make_rational(-25, 8), 0, 1}));
    CHECK(charpoly_oracle(adjacency(star_graph(4))) == poly({0, 0, -3, 0, 1}));
}

TEST_CASE("forest recursion base cases and validation") {
    DegreeLabeledForest lone{Graph::from_edge_list(1, {}), {4}};
    CHECK(charpoly_forest(lone) == Polynomial::x());

    DegreeLabeledForest cyclic{cycle_graph(3), {2, 2, 2}};
    CHECK_THROWS_AS(charpoly_forest(cyclic), std::invalid_argument);

    DegreeLabeledForest bad_label{path_graph(3), {1, 1, 1}};
    CHECK_THROWS_AS(charpoly_forest(bad_label), std::invalid_argument);

    DegreeLabeledForest zero_label{Graph::from_edge_list(1, {}), {0}};
    CHECK_THROWS_AS(charpoly_forest(zero_label), std::invalid_argument);
}

TEST_CASE("forest recursion equals the oracle on paths") {
    Polynomial p4 = charpoly_forest(DegreeLabeledForest::from_tree(path_graph(4)));
    CHECK(p4 == charpoly_oracle(extended_adjacency(path_graph(4))));
    CHECK(p4 == poly({make_rational(625, 256), 0, make_rational(-33, 8), 0, 1}));
}

TEST_CASE("principal submatrix keeps ambient degrees") {
    for (int n : {8, 12}) {
        Graph t4 = tree_t4(n);
        // the star on the center plus its leaves, cut out of the host tree
        std::vector<int> vertices{0};
        for (int v = 1; v <= n - 5; ++v) vertices.push_back(v);
        DegreeLabeledForest sub = principal_subforest(t4, vertices);
        CHECK(sub.forest.order() == n - 4);
        CHECK(sub.ambient_degree[0] == n - 3);

        // equals the charpoly of (n-3 + 1/(n-3))/2 times the star adjacency
        Rational scale = weight(1, n - 3);
        RationalSymMatrix scaled(n - 4);
        for (int v = 1; v <= n - 5; ++v) scaled.set(0, v, scale);
        CHECK(charpoly_forest(sub) == charpoly_oracle(scaled));
    }
    CHECK_THROWS_AS(principal_subforest(cycle_graph(4), {0, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(principal_subforest(path_graph(3), {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(principal_subforest(path_graph(3), {5}), std::invalid_argument);
}

TEST_CASE("forest recursion equals the oracle on random trees") {
    testutil::Rng rng;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 5 + rng.below(12);  // up to 16
        Graph t = testutil::random_tree(n, rng);
        CHECK(charpoly_forest(DegreeLabeledForest::from_tree(t)) ==
              charpoly_oracle(extended_adjacency(t)));
    }
}

TEST_CASE("path adjacency recurrence") {
    CHECK(path_adjacency_charpoly(1) == Polynomial::x());
    CHECK(path_adjacency_charpoly(2) == poly({-1, 0, 1}));
    CHECK(path_adjacency_charpoly(3) == poly({0, -2, 0, 1}));
    CHECK(path_adjacency_charpoly(5) == poly({0, 3, 0, -4, 0, 1}));
    CHECK_THROWS_AS(path_adjacency_charpoly(0), std::invalid_argument);

    for (int n = 1; n <= 14; ++n) {
        CHECK(path_adjacency_charpoly(n) == charpoly_oracle(adjacency(path_graph(n))));
    }
}

TEST_CASE("extended path expansion identity") {
    CHECK_THROWS_AS(extended_path_charpoly_expansion(4), std::invalid_argument);
    for (int n = 5; n <= 14; ++n) {
        Polynomial expansion = extended_path_charpoly_expansion(n);
        CHECK(expansion == charpoly_oracle(extended_adjacency(path_graph(n))));
        CHECK(expansion == extended_path_charpoly(n));
    }
    // the tridiagonal route reaches further at trivial cost
    for (int n = 15; n <= 30; ++n) {
        CHECK(extended_path_charpoly_expansion(n) == extended_path_charpoly(n));
    }
}

TEST_CASE("g2 closed form at n=12, built independently") {
    Polynomial x2({std::vector<Rational>{0, 0, 1}});
    Polynomial expected = (x2 - Polynomial::constant(make_rational(13448, 81))) *
                              (x2 - Polynomial::constant(make_rational(41, 16))) -
                          (x2 - Polynomial::constant(make_rational(25, 16))) *
                              make_rational(7225, 1296);
    CHECK(g2(12) == expected);
}

TEST_CASE("factorization identities against the oracle") {
    for (int n : {8, 12, 17, 24}) {
        CHECK(g2(n).shifted_up(n - 4) == charpoly_oracle(extended_adjacency(tree_t2(n))));
        CHECK(g3(n).shifted_up(n - 4) == charpoly_oracle(extended_adjacency(tree_t3(n))));
        CHECK(g4(n).shifted_up(n - 6) == charpoly_oracle(extended_adjacency(tree_t4(n))));
    }
    CHECK_THROWS_AS(g2(6), std::invalid_argument);
    CHECK_THROWS_AS(g3(6), std::invalid_argument);
    CHECK_THROWS_AS(g4(7), std::invalid_argument);
    CHECK(g2(12).degree() == 4);
    CHECK(g3(12).degree() == 4);
    CHECK(g4(12).degree() == 6);
}

TEST_CASE("largest root bisection") {
    CHECK(largest_root(poly({-1, 0, 1}), 0, 2, 1e-10) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(largest_root(poly({0, make_rational(-25, 8), 0, 1}), 1e-10) ==
          doctest::Approx(std::sqrt(25.0 / 8.0)).epsilon(1e-9));
    CHECK(largest_root(path_adjacency_charpoly(5), 1e-10) ==
          doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
    // zero roots at the origin must not shadow the top root
    CHECK(largest_root(g2(12).shifted_up(8), 1e-10) ==
          doctest::Approx(largest_root(g2(12), 1e-10)).epsilon(1e-9));

    CHECK_THROWS_AS(largest_root(poly({1, 0, 1}), 0, 2, 1e-10), std::runtime_error);  // x^2+1
    CHECK_THROWS_AS(largest_root(poly({-1, 0, 1}), 2, 1, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(largest_root(poly({-1, 0, 1}), 0, 2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(largest_root(Polynomial::constant(3), 0, 2, 1e-10), std::invalid_argument);
}

TEST_CASE("bisection agrees with the power method on every small tree") {
    for (int n = 2; n <= 10; ++n) {
        for (const Graph& t : free_trees(n)) {
            RationalSymMatrix ex = extended_adjacency(t);
            double via_root = largest_root(charpoly_oracle(ex), 0, max_row_sum_bound(ex), 1e-10);
            double via_power = eta1(t);
            CHECK(via_root == doctest::Approx(via_power).epsilon(1e-8));
        }
    }
}

TEST_CASE("root bounds") {
    Polynomial p = charpoly_oracle(extended_adjacency(star_graph(8)));
    double top = largest_root(p, 1e-10);
    CHECK(to_double(cauchy_root_bound(p)) > top);
    CHECK(to_double(max_row_sum_bound(extended_adjacency(star_graph(8)))) > top);
}

TEST_CASE("octic table at 12") {
    CHECK(appendix_f(12) == 742467);
    CHECK(appendix_derivative(1, 12) == 2984784);
    CHECK(appendix_derivative(2, 12) == 4497602);
    CHECK(appendix_derivative(3, 12) == 4736598);
    CHECK(appendix_derivative(4, 12) == 3784464);
    CHECK(appendix_derivative(5, 12) == 2292240);
    CHECK(appendix_derivative(6, 12) == 1005840);
    CHECK(appendix_derivative(7, 12) == 287280);
    CHECK(appendix_derivative(8, 12) == 40320);
    CHECK_THROWS_AS(appendix_derivative(9, 12), std::invalid_argument);
    CHECK_THROWS_AS(appendix_derivative(-1, 12), std::invalid_argument);
}

TEST_CASE("derivative displays form an exact cascade") {
    for (int k = 0; k < 8; ++k) {
        CHECK(appendix_poly(k).derivative() == appendix_poly(k + 1));
    }
}

TEST_CASE("squared-difference chain reduces to 4(x-5)f(x)") {
    auto lin = [](long c0, long c1) { return poly({Rational(c0), Rational(c1)}); };
    Polynomial x_m3 = lin(-3, 1), x_m4 = lin(-4, 1), x_m5 = lin(-5, 1), x_m1 = lin(-1, 1);
    Polynomial q = x_m4 * x_m4 + Polynomial::constant(1);
    Polynomial bracket = x_m3 * x_m3 * x_m4 * x_m4 * x_m5 * Rational(2) - q * q * x_m1;
    Polynomial lhs = bracket * bracket - q * q * q * q * poly({61, -14, 1});
    CHECK(lhs == x_m5 * Rational(4) * appendix_poly(0));
}

TEST_CASE("inequality check") {
    CHECK(appendix_inequality_check(12));
    for (long n = 13; n <= 100; ++n) CHECK(appendix_inequality_check(n));
    CHECK(Rational(4 * (12 - 5)) * appendix_f(12) == Rational(28) * 742467);
    CHECK_THROWS_AS(appendix_inequality_check(11), std::invalid_argument);
}
