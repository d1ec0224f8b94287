#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "extremal.hpp"
#include "graph.hpp"

using namespace exspectra;

namespace {

SolveOptions opts() { return SolveOptions{}; }

}  // namespace

TEST_CASE("star closed form") {
    CHECK(star_eta_closed_form(5) == doctest::Approx(4.25).epsilon(1e-12));
    CHECK(star_eta_closed_form(10) == doctest::Approx(82.0 / 6.0).epsilon(1e-12));
    CHECK(star_eta_closed_form(2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(star_eta_closed_form(1), std::invalid_argument);
}

TEST_CASE("rank_trees slices") {
    ScanCache cache;
    auto top5 = rank_trees(12, 5, 0, opts(), cache);
    REQUIRE(top5.size() == 5);
    CHECK(top5[0].code == canonical_code(star_graph(12)));
    CHECK(top5[1].code == canonical_code(tree_t1(12)));
    CHECK(top5[2].code == canonical_code(tree_t2(12)));
    CHECK(top5[3].code == canonical_code(tree_t3(12)));
    CHECK(top5[4].code == canonical_code(tree_t4(12)));
    for (size_t i = 1; i < 5; ++i) CHECK(top5[i - 1].eta1 > top5[i].eta1);
    CHECK(top5[0].degrees.front() == 11);

    auto bottom = rank_trees(12, 0, 1, opts(), cache);
    REQUIRE(bottom.size() == 1);
    CHECK(bottom[0].code == canonical_code(path_graph(12)));

    auto s5 = rank_trees(5, 1, 0, opts(), cache);
    REQUIRE(s5.size() == 1);
    CHECK(s5[0].eta1 == doctest::Approx(4.25).epsilon(1e-9));

    CHECK_THROWS_AS(rank_trees(3, 1, 0, opts(), cache), std::invalid_argument);
    CHECK_THROWS_AS(rank_trees(15, 1, 0, opts(), cache), std::invalid_argument);
    CHECK_THROWS_AS(rank_trees(8, -1, 0, opts(), cache), std::invalid_argument);
}

TEST_CASE("tree scans expose bound aggregates") {
    ScanCache cache;
    const TreeScan& scan = cache.tree_scan(9, opts());
    CHECK(scan.ranked.size() == 47);
    CHECK(scan.worst_left.value <= 1e-9);
    CHECK(scan.worst_right.value <= 1e-9);
    CHECK(scan.worst_fm1.value <= 1e-9);
    CHECK(scan.worst_right_equality.set);      // the star is bipartite semiregular
    CHECK(scan.worst_right_equality.value <= 1e-9);
    CHECK(scan.best_right_gap_other.set);
    CHECK(scan.best_right_gap_other.value > 1e-9);
}

TEST_CASE("theorem and conjecture checks pass on reduced ranges") {
    ScanCache cache;
    CHECK(verify_theorem_1_2(5, 10, opts(), cache).passed);
    CHECK(verify_theorem_1_3(12, 12, opts(), cache).passed);
    CHECK(verify_theorem_4_1(5, 6, opts(), cache).passed);
    CHECK(check_conjecture(5, 6, opts(), cache).passed);
    CHECK(verify_claims_exact(12, 14, opts()).passed);
    CHECK(verify_g_identities(8, 10).passed);
    CHECK(verify_forest_identity(2, 8).passed);
    CHECK(verify_path_facts(5, 16, opts()).passed);
    CHECK(verify_appendix(12, 40).passed);
    CHECK(verify_bounds(5, 8, opts(), cache).passed);
    CHECK(verify_star_closed_form(2, 20, opts()).passed);
}

TEST_CASE("connected scan summary sanity at n=5") {
    ScanCache cache;
    const ConnectedScanSummary& s = cache.connected_scan(5, opts());
    CHECK(s.graphs == 728);
    CHECK(s.paths == 60);   // 5!/2
    CHECK(s.cycles == 12);  // 4!/2
    CHECK(s.stars == 5);
    CHECK(s.min_all.set);
    CHECK(s.min_nonpath.value == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(s.max_all.value == doctest::Approx(4.25).epsilon(1e-9));
    CHECK(s.worst_left.value <= 1e-9);
    CHECK(s.worst_fm1.value <= 1e-9);
}

TEST_CASE("range validation") {
    ScanCache cache;
    CHECK_THROWS_AS(verify_theorem_1_3(5, 5, opts(), cache), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem_4_1(5, 9, opts(), cache), std::invalid_argument);
    CHECK_THROWS_AS(verify_claims_exact(8, 10, opts()), std::invalid_argument);
    CHECK_THROWS_AS(verify_path_facts(2, 4, opts()), std::invalid_argument);
    CHECK_THROWS_AS(run_check("no-such-check", 0, 0, opts(), cache), std::invalid_argument);
}

TEST_CASE("run_check dispatch with default ranges") {
    ScanCache cache;
    VerificationReport rep = run_check("appendix", 0, 0, opts(), cache);
    CHECK(rep.passed);
    CHECK(rep.params.front().second == "12");
    CHECK(run_check("g-identities", 8, 9, opts(), cache).passed);
}

TEST_CASE("report serialization") {
    ScanCache cache;
    VerificationReport rep = verify_theorem_4_1(5, 5, opts(), cache);
    std::string json = rep.to_json();
    CHECK(json.find("\"check\": \"theorem-4.1\"") != std::string::npos);
    CHECK(json.find("\"passed\": true") != std::string::npos);
    CHECK(json.find("\"witnesses\"") != std::string::npos);

    std::string csv = rep.to_csv();
    CHECK(csv.rfind("check,passed,item,code,violation,key,value\n", 0) == 0);
    CHECK(csv.find("theorem-4.1,true") != std::string::npos);

    // a failed report always carries a violation witness
    VerificationReport failed;
    failed.check = "synthetic";
    failed.fail("broken", "witness-code", {{"value", "1"}});
    CHECK_FALSE(failed.passed);
    bool has_violation = false;
    for (const auto& w : failed.witnesses) has_violation |= w.violation;
    CHECK(has_violation);
    CHECK(failed.to_csv().find("synthetic,false,broken,witness-code,true,value,1") !=
          std::string::npos);
}

TEST_CASE("lambda ranking disagrees with eta ranking at n=12") {
    ScanCache cache;
    const TreeScan& scan = cache.tree_scan(12, opts());
    std::string t2 = canonical_code(tree_t2(12)), t3 = canonical_code(tree_t3(12));
    double eta_t2 = 0, eta_t3 = 0, lam_t2 = 0, lam_t3 = 0;
    for (const auto& e : scan.ranked) {
        if (e.code == t2) {
            eta_t2 = e.eta1;
            lam_t2 = e.lambda1;
        } else if (e.code == t3) {
            eta_t3 = e.eta1;
            lam_t3 = e.lambda1;
        }
    }
    CHECK(eta_t2 > eta_t3);
    CHECK(lam_t3 > lam_t2);
}
