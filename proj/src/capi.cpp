#include "exspectra.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "charpoly.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "extremal.hpp"
#include "graph.hpp"
#include "matrix.hpp"
#include "spectra.hpp"

using namespace exspectra;

struct ex_graph {
    Graph g;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

SolveOptions to_core(const ex_solve_options* opts) {
    SolveOptions core;
    if (opts) {
        core.tol = opts->tol;
        core.max_iter = opts->max_iter;
        core.jobs = opts->jobs;
    }
    return core;
}

// Runs fn, translating exceptions into status codes and the thread-local
// message.
template <typename Fn>
ex_status guarded(Fn&& fn) {
    try {
        fn();
        return EX_OK;
    } catch (const ParseError& e) {
        set_error(e.what());
        return EX_ERROR_PARSE;
    } catch (const ConvergenceError& e) {
        set_error(e.what());
        return EX_ERROR_NO_CONVERGENCE;
    } catch (const MinGapError& e) {
        set_error(e.what());
        return EX_ERROR_MIN_GAP;
    } catch (const DisconnectedError& e) {
        set_error(e.what());
        return EX_ERROR_DISCONNECTED;
    } catch (const IsolatedVertexError& e) {
        set_error(e.what());
        return EX_ERROR_ISOLATED_VERTEX;
    } catch (const NotATreeError& e) {
        set_error(e.what());
        return EX_ERROR_NOT_A_TREE;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return EX_ERROR_INVALID_ARGUMENT;
    } catch (const std::ios_base::failure& e) {
        set_error(e.what());
        return EX_ERROR_IO;
    } catch (const std::exception& e) {
        set_error(e.what());
        return EX_ERROR_INTERNAL;
    } catch (...) {
        set_error("unknown failure");
        return EX_ERROR_INTERNAL;
    }
}

ex_status require(bool ok, const char* msg) {
    if (ok) return EX_OK;
    set_error(msg);
    return EX_ERROR_INVALID_ARGUMENT;
}

std::string ranked_to_json(const std::vector<RankedEntry>& entries);

}  // namespace

extern "C" {

const char* ex_version(void) { return "0.1.0"; }

const char* ex_status_name(ex_status status) {
    switch (status) {
        case EX_OK: return "ok";
        case EX_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case EX_ERROR_PARSE: return "parse error";
        case EX_ERROR_DISCONNECTED: return "disconnected graph";
        case EX_ERROR_ISOLATED_VERTEX: return "isolated vertex";
        case EX_ERROR_NOT_A_TREE: return "not a tree";
        case EX_ERROR_NO_CONVERGENCE: return "no convergence";
        case EX_ERROR_MIN_GAP: return "minimum gap violated";
        case EX_ERROR_IO: return "io error";
        case EX_ERROR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* ex_last_error(void) { return g_last_error.c_str(); }

void ex_string_free(char* s) { delete[] s; }

void ex_solve_options_init(ex_solve_options* opts) {
    if (!opts) return;
    opts->tol = 1e-12;
    opts->max_iter = 100000;
    opts->jobs = 0;
}

ex_status ex_graph_from_edge_list(int n, const int* endpoints, int edge_count, ex_graph** out) {
    if (ex_status s = require(out && (edge_count == 0 || endpoints), "null argument")) return s;
    return guarded([&] {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<size_t>(edge_count));
        for (int i = 0; i < edge_count; ++i) {
            pairs.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        }
        *out = new ex_graph{Graph::from_edge_list(n, pairs)};
    });
}

ex_status ex_graph_family(const char* name, const int* params, int param_count, ex_graph** out) {
    if (ex_status s = require(name && out && (param_count == 0 || params), "null argument")) return s;
    return guarded([&] {
        FamilySpec spec;
        spec.name = name;
        spec.params.assign(params, params + param_count);
        *out = new ex_graph{make_family(spec)};
    });
}

ex_status ex_graph_parse(const char* text, ex_graph** out) {
    if (ex_status s = require(text && out, "null argument")) return s;
    return guarded([&] {
        std::istringstream in{std::string(text)};
        *out = new ex_graph{read_edge_list(in)};
    });
}

ex_status ex_graph_read_file(const char* path, ex_graph** out) {
    if (ex_status s = require(path && out, "null argument")) return s;
    return guarded([&] { *out = new ex_graph{read_edge_list_file(path)}; });
}

void ex_graph_free(ex_graph* g) { delete g; }

int ex_graph_order(const ex_graph* g) { return g ? g->g.order() : 0; }

int ex_graph_size(const ex_graph* g) { return g ? g->g.size() : 0; }

ex_status ex_graph_degrees(const ex_graph* g, int* out) {
    if (ex_status s = require(g && out, "null argument")) return s;
    const auto& deg = g->g.degrees();
    std::memcpy(out, deg.data(), deg.size() * sizeof(int));
    return EX_OK;
}

int ex_graph_is_connected(const ex_graph* g) { return g && g->g.is_connected() ? 1 : 0; }

int ex_graph_is_tree(const ex_graph* g) { return g && g->g.is_tree() ? 1 : 0; }

ex_status ex_graph_delete_vertex(const ex_graph* g, int v, ex_graph** out) {
    if (ex_status s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = new ex_graph{g->g.delete_vertex(v)}; });
}

ex_status ex_graph_canonical_code(const ex_graph* g, char** out) {
    if (ex_status s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(canonical_code(g->g)); });
}

ex_status ex_graph_regularity_class(const ex_graph* g, char** out) {
    if (ex_status s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(to_string(bipartite_regularity_class(g->g))); });
}

ex_status ex_graph_edge_list_text(const ex_graph* g, char** out) {
    if (ex_status s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(write_edge_list(g->g)); });
}

ex_status ex_eta1(const ex_graph* g, const ex_solve_options* opts, double* value) {
    if (ex_status s = require(g && value, "null argument")) return s;
    return guarded([&] { *value = eta1(g->g, to_core(opts)); });
}

ex_status ex_lambda1(const ex_graph* g, const ex_solve_options* opts, double* value) {
    if (ex_status s = require(g && value, "null argument")) return s;
    return guarded([&] { *value = lambda1(g->g, to_core(opts)); });
}

ex_status ex_extended_energy(const ex_graph* g, const ex_solve_options* opts, double* value) {
    if (ex_status s = require(g && value, "null argument")) return s;
    return guarded([&] { *value = extended_energy(g->g, to_core(opts)); });
}

ex_status ex_first_zagreb(const ex_graph* g, long long* value) {
    if (ex_status s = require(g && value, "null argument")) return s;
    *value = first_zagreb(g->g);
    return EX_OK;
}

ex_status ex_forgotten(const ex_graph* g, long long* value) {
    if (ex_status s = require(g && value, "null argument")) return s;
    *value = forgotten(g->g);
    return EX_OK;
}

ex_status ex_fm1_bound(const ex_graph* g, char** out) {
    if (ex_status s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(to_string(eta_lower_bound_fm1(g->g))); });
}

ex_status ex_sandwich(const ex_graph* g, const ex_solve_options* opts, double* lower,
                      double* upper) {
    if (ex_status s = require(g && lower && upper, "null argument")) return s;
    return guarded([&] {
        double lam = lambda1(g->g, to_core(opts));
        auto [lo, hi] = eta_sandwich(g->g, lam);
        *lower = lo;
        *upper = hi;
    });
}

ex_status ex_charpoly(const ex_graph* g, int extended, char** json_out) {
    if (ex_status s = require(g && json_out, "null argument")) return s;
    return guarded([&] {
        RationalSymMatrix m = extended ? extended_adjacency(g->g) : adjacency(g->g);
        Polynomial p = charpoly_oracle(m);
        std::string json = "[";
        auto coeffs = p.coeff_strings();
        // charpoly of an n-vertex graph always carries n+1 coefficients
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (i) json += ",";
            json += "\"" + coeffs[i] + "\"";
        }
        json += "]";
        *json_out = dup_string(json);
    });
}

ex_status ex_enumerate_trees(int n, const char* emit, char** out) {
    if (ex_status s = require(emit && out, "null argument")) return s;
    return guarded([&] {
        std::string mode = emit;
        std::vector<Graph> trees = free_trees(n);
        std::string text;
        if (mode == "count") {
            text = std::to_string(trees.size()) + "\n";
        } else if (mode == "codes") {
            for (const Graph& t : trees) text += canonical_code(t) + "\n";
        } else if (mode == "edges") {
            for (size_t i = 0; i < trees.size(); ++i) {
                if (i) text += "\n";
                text += write_edge_list(trees[i]);
            }
        } else {
            throw std::invalid_argument("emit must be count, codes, or edges");
        }
        *out = dup_string(text);
    });
}

ex_status ex_count_connected(int n, int dedup, long long* out) {
    if (ex_status s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        ConnectedGraphStream stream(n, dedup != 0);
        long long count = 0;
        while (stream.next()) ++count;
        *out = count;
    });
}

ex_status ex_rank_trees(int n, int top, int bottom, const ex_solve_options* opts,
                        char** json_out) {
    if (ex_status s = require(json_out != nullptr, "null argument")) return s;
    return guarded([&] {
        ScanCache cache;
        auto entries = rank_trees(n, top, bottom, to_core(opts), cache);
        *json_out = dup_string(ranked_to_json(entries));
    });
}

ex_status ex_verify(const char* check, int n_lo, int n_hi, const ex_solve_options* opts, int csv,
                    char** report_out, int* passed) {
    if (ex_status s = require(check && report_out && passed, "null argument")) return s;
    return guarded([&] {
        ScanCache cache;
        VerificationReport rep = run_check(check, n_lo, n_hi, to_core(opts), cache);
        *report_out = dup_string(csv ? rep.to_csv() : rep.to_json());
        *passed = rep.passed ? 1 : 0;
    });
}

ex_status ex_known_checks(char** out) {
    if (ex_status s = require(out != nullptr, "null argument")) return s;
    std::string text;
    for (const auto& name : known_checks()) text += name + "\n";
    *out = dup_string(text);
    return EX_OK;
}

}  // extern "C"

namespace {

std::string ranked_to_json(const std::vector<RankedEntry>& entries) {
    std::string json = "[";
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (i) json += ",";
        json += "{\"code\":\"" + e.code + "\",\"eta1\":" + fmt_double(e.eta1) +
                ",\"lambda1\":" + fmt_double(e.lambda1) + ",\"degrees\":[";
        for (size_t d = 0; d < e.degrees.size(); ++d) {
            if (d) json += ",";
            json += std::to_string(e.degrees[d]);
        }
        json += "]}";
    }
    json += "]";
    return json;
}

}  // namespace
