#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "enumeration.hpp"
#include "graph.hpp"
#include "spectra.hpp"

namespace exspectra {

struct RankedEntry {
    std::string code;
    double eta1 = 0.0;
    double lambda1 = 0.0;
    std::vector<int> degrees;  // descending
};

// Structured pass/fail outcome with numeric witnesses. A failed report always
// carries at least one witness flagged as a violation.
struct VerificationReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    bool passed = true;
    double min_gap = std::numeric_limits<double>::infinity();

    struct Witness {
        std::string item;
        std::string code;  // canonical code, family name, or edge mask
        std::vector<std::pair<std::string, std::string>> values;
        bool violation = false;
    };
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;

    void note_gap(double gap);
    Witness& add_witness(const std::string& item, const std::string& code);
    void fail(const std::string& item, const std::string& code,
              std::vector<std::pair<std::string, std::string>> values);

    std::string to_json() const;
    std::string to_csv() const;
};

// Every tree on n vertices with both spectral radii, plus bound aggregates
// used by the lemma checks. Extrema keep the canonical code of the witness.
struct TreeScan {
    struct Extremum {
        double value = 0.0;
        std::string code;
        bool set = false;
    };
    int n = 0;
    std::vector<RankedEntry> ranked;  // eta1 descending, ties by code
    Extremum worst_left;              // max of lambda1 - eta1
    Extremum worst_right;             // max of eta1 - weight(max,min)*lambda1
    Extremum worst_fm1;               // max of F/M1 - eta1
    Extremum worst_right_equality;    // max |upper - eta1|, regular/semiregular only
    Extremum best_right_gap_other;    // min upper - eta1, class other only
};

// One pass over every labeled connected graph on n vertices. Extrema keep the
// edge mask of the witness.
struct ConnectedScanSummary {
    struct Extreme {
        double value = 0.0;
        uint64_t mask = 0;
        bool set = false;
    };
    int n = 0;
    long long graphs = 0;
    Extreme min_all, min_nonpath, min_nonpath_noncycle;
    Extreme min_unicyclic_noncycle, min_bipartite_nonpath;
    Extreme max_all, max_nonstar;
    long long cycles = 0, paths = 0, stars = 0, regulars = 0;
    Extreme worst_cycle_dev;           // max |eta1 - 2| over cycles
    Extreme worst_regular_dev;         // max |eta1 - k| over k-regular graphs
    Extreme worst_left_equality_dev;   // max |eta1 - lambda1| over regular graphs
    Extreme best_left_gap_irregular;   // min eta1 - lambda1 over irregular graphs
    Extreme worst_left;                // max of lambda1 - eta1
    Extreme worst_right;               // max of eta1 - upper
    Extreme worst_fm1;                 // max of F/M1 - eta1
    Extreme worst_right_equality_dev;  // max |upper - eta1| over regular/semiregular
    Extreme best_right_gap_other;      // min upper - eta1 over class other
};

// Scans are expensive; verification entry points share them through a cache.
struct ScanCache {
    std::map<int, TreeScan> trees;
    std::map<int, ConnectedScanSummary> connected;
    const TreeScan& tree_scan(int n, const SolveOptions& opts);
    const ConnectedScanSummary& connected_scan(int n, const SolveOptions& opts);
};

TreeScan scan_trees(int n, const SolveOptions& opts);
ConnectedScanSummary scan_connected(int n, const SolveOptions& opts);

// (n^2 - 2n + 2) / (2 sqrt(n-1)) for n >= 2.
double star_eta_closed_form(int n);

// Top/bottom slices of all trees on n vertices ranked by eta1 descending.
// Adjacent returned entries closer than 1e-6 raise MinGapError.
std::vector<RankedEntry> rank_trees(int n, int top, int bottom, const SolveOptions& opts,
                                    ScanCache& cache);

VerificationReport verify_theorem_1_2(int lo, int hi, const SolveOptions& opts, ScanCache& cache);
VerificationReport verify_theorem_1_3(int lo, int hi, const SolveOptions& opts, ScanCache& cache);
VerificationReport verify_theorem_4_1(int lo, int hi, const SolveOptions& opts, ScanCache& cache);
VerificationReport check_conjecture(int lo, int hi, const SolveOptions& opts, ScanCache& cache);
VerificationReport verify_claims_exact(int lo, int hi, const SolveOptions& opts);
VerificationReport verify_g_identities(int lo, int hi);
VerificationReport verify_forest_identity(int lo, int hi);
VerificationReport verify_path_facts(int lo, int hi, const SolveOptions& opts);
VerificationReport verify_appendix(int lo, int hi);
VerificationReport verify_bounds(int lo, int hi, const SolveOptions& opts, ScanCache& cache);
VerificationReport verify_star_closed_form(int lo, int hi, const SolveOptions& opts);

// Dispatch by check name; lo/hi <= 0 select the check's default range.
VerificationReport run_check(const std::string& check, int lo, int hi, const SolveOptions& opts,
                             ScanCache& cache);
std::vector<std::string> known_checks();

std::string fmt_double(double v);  // 12 significant digits

}  // namespace exspectra
