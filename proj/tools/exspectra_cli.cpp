// Command-line front end over the exspectra C API.
//
// Subcommands: compute, enumerate, rank, verify, conjecture. Output is a JSON
// envelope (or CSV rows) on stdout; exit status is 0 only when every
// requested check passed.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "exspectra.h"

using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalArgs {
    std::string format = "json";
    double tol = 1e-12;
    int max_iter = 100000;
    int jobs = 0;
};

ex_solve_options solve_options(const GlobalArgs& g) {
    ex_solve_options opts;
    ex_solve_options_init(&opts);
    opts.tol = g.tol;
    opts.max_iter = g.max_iter;
    opts.jobs = g.jobs;
    return opts;
}

[[noreturn]] void die(ex_status status) {
    std::cerr << "error: " << ex_status_name(status) << ": " << ex_last_error() << "\n";
    std::exit(2);
}

void check(ex_status status) {
    if (status != EX_OK) die(status);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    ex_string_free(s);
    return out;
}

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// doubles are rounded to 12 significant digits before entering the envelope
ordered_json num(double v) { return ordered_json::parse(fmt12(v)); }

class Envelope {
public:
    Envelope(std::string command, ordered_json parameters)
        : start_(std::chrono::steady_clock::now()) {
        j_["command"] = std::move(command);
        j_["parameters"] = std::move(parameters);
    }

    void emit(const ordered_json& result, const std::string& format, const std::string& csv) {
        if (format == "csv") {
            std::cout << csv;
            return;
        }
        j_["result"] = result;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        j_["timing_ms"] = static_cast<long long>(ms);
        j_["version"] = ex_version();
        std::cout << j_.dump(2) << "\n";
    }

private:
    ordered_json j_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

struct GraphArgs {
    std::string input;
    std::string family;
    int n = 0, a = 0, b = 0;
    std::string legs;
};

ex_graph* build_graph(const GraphArgs& args, ordered_json& params) {
    ex_graph* g = nullptr;
    if (!args.input.empty()) {
        params["input"] = args.input;
        check(ex_graph_read_file(args.input.c_str(), &g));
        return g;
    }
    if (args.family.empty()) {
        std::cerr << "error: provide --input FILE or --family NAME\n";
        std::exit(2);
    }
    params["family"] = args.family;
    std::vector<int> p;
    const std::string& f = args.family;
    if (f == "K_ab" || f == "double_star") {
        p = {args.a, args.b};
        params["a"] = args.a;
        params["b"] = args.b;
    } else if (f == "spider") {
        p = parse_int_list(args.legs);
        params["legs"] = args.legs;
    } else if (f.size() == 2 && f[0] == 'H') {
        // fixed order, no parameters
    } else {
        p = {args.n};
        params["n"] = args.n;
    }
    check(ex_graph_family(f.c_str(), p.data(), static_cast<int>(p.size()), &g));
    return g;
}

int cmd_compute(const GlobalArgs& global, const GraphArgs& gargs, const std::string& what,
                const std::string& matrix) {
    ordered_json params;
    ex_graph* g = build_graph(gargs, params);
    params["what"] = what;
    Envelope env("compute", params);
    ex_solve_options opts = solve_options(global);

    ordered_json result;
    std::string csv = "what,value\n";
    std::stringstream ss(what);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "eta1") {
            double v;
            check(ex_eta1(g, &opts, &v));
            result["eta1"] = num(v);
            csv += "eta1," + fmt12(v) + "\n";
        } else if (item == "lambda1") {
            double v;
            check(ex_lambda1(g, &opts, &v));
            result["lambda1"] = num(v);
            csv += "lambda1," + fmt12(v) + "\n";
        } else if (item == "energy") {
            double v;
            check(ex_extended_energy(g, &opts, &v));
            result["energy"] = num(v);
            csv += "energy," + fmt12(v) + "\n";
        } else if (item == "m1") {
            long long v;
            check(ex_first_zagreb(g, &v));
            result["m1"] = v;
            csv += "m1," + std::to_string(v) + "\n";
        } else if (item == "f") {
            long long v;
            check(ex_forgotten(g, &v));
            result["f"] = v;
            csv += "f," + std::to_string(v) + "\n";
        } else if (item == "bounds") {
            double lo, hi;
            check(ex_sandwich(g, &opts, &lo, &hi));
            char* fm1 = nullptr;
            check(ex_fm1_bound(g, &fm1));
            std::string fm1_str = take_string(fm1);
            result["sandwich_lower"] = num(lo);
            result["sandwich_upper"] = num(hi);
            result["fm1_bound"] = fm1_str;
            csv += "sandwich_lower," + fmt12(lo) + "\n";
            csv += "sandwich_upper," + fmt12(hi) + "\n";
            csv += "fm1_bound," + fm1_str + "\n";
        } else if (item == "charpoly") {
            char* coeffs = nullptr;
            check(ex_charpoly(g, matrix == "extended" ? 1 : 0, &coeffs));
            ordered_json arr = ordered_json::parse(take_string(coeffs));
            result["charpoly"] = arr;
            for (size_t i = 0; i < arr.size(); ++i) {
                csv += "charpoly[" + std::to_string(i) + "]," + arr[i].get<std::string>() + "\n";
            }
        } else {
            std::cerr << "error: unknown quantity '" << item << "'\n";
            std::exit(2);
        }
    }
    ex_graph_free(g);
    env.emit(result, global.format, csv);
    return 0;
}

int cmd_enumerate(const GlobalArgs& global, int n, const std::string& kind, bool dedup,
                  const std::string& emit, bool format_given) {
    ordered_json params{{"n", n}, {"kind", kind}, {"emit", emit}};
    if (kind == "graphs") {
        params["dedup"] = dedup;
        if (emit != "count") {
            std::cerr << "error: --kind graphs supports --emit count only\n";
            std::exit(2);
        }
        long long count;
        check(ex_count_connected(n, dedup ? 1 : 0, &count));
        if (!format_given) {
            std::cout << count << "\n";
            return 0;
        }
        Envelope env("enumerate", params);
        env.emit(ordered_json{{"count", count}}, global.format,
                 "count\n" + std::to_string(count) + "\n");
        return 0;
    }
    char* text = nullptr;
    check(ex_enumerate_trees(n, emit.c_str(), &text));
    std::string payload = take_string(text);
    if (!format_given) {
        std::cout << payload;
        return 0;
    }
    Envelope env("enumerate", params);
    ordered_json result;
    std::string csv;
    if (emit == "count") {
        long long count = std::stoll(payload);
        result["count"] = count;
        csv = "count\n" + std::to_string(count) + "\n";
    } else if (emit == "codes") {
        ordered_json codes = ordered_json::array();
        std::stringstream lines(payload);
        std::string line;
        csv = "code\n";
        while (std::getline(lines, line)) {
            codes.push_back(line);
            csv += line + "\n";
        }
        result["codes"] = codes;
    } else {
        ordered_json blocks = ordered_json::array();
        std::string block;
        std::stringstream lines(payload);
        std::string line;
        csv = "edge_list\n";
        while (std::getline(lines, line)) {
            if (line.empty()) {
                blocks.push_back(block);
                block.clear();
            } else {
                block += line + "\n";
            }
        }
        if (!block.empty()) blocks.push_back(block);
        for (const auto& b : blocks) csv += "\"" + b.get<std::string>() + "\"\n";
        result["graphs"] = blocks;
    }
    env.emit(result, global.format, csv);
    return 0;
}

int cmd_rank(const GlobalArgs& global, int n, int top, int bottom) {
    ordered_json params{{"n", n}, {"top", top}, {"bottom", bottom}};
    Envelope env("rank", params);
    ex_solve_options opts = solve_options(global);
    char* json = nullptr;
    check(ex_rank_trees(n, top, bottom, &opts, &json));
    ordered_json entries = ordered_json::parse(take_string(json));
    std::string csv = "code,eta1,lambda1,degrees\n";
    for (const auto& e : entries) {
        std::string degrees;
        for (const auto& d : e["degrees"]) {
            if (!degrees.empty()) degrees += " ";
            degrees += std::to_string(d.get<int>());
        }
        csv += e["code"].get<std::string>() + "," + fmt12(e["eta1"].get<double>()) + "," +
               fmt12(e["lambda1"].get<double>()) + "," + degrees + "\n";
    }
    env.emit(ordered_json{{"entries", entries}}, global.format, csv);
    return 0;
}

int run_verify(const GlobalArgs& global, const std::string& check_name, int lo, int hi) {
    ex_solve_options opts = solve_options(global);
    bool csv = global.format == "csv";
    char* report = nullptr;
    int passed = 0;
    ex_status status = ex_verify(check_name.c_str(), lo, hi, &opts, csv ? 1 : 0, &report, &passed);
    if (status != EX_OK) die(status);
    std::cout << take_string(report);
    if (!csv) std::cout << "\n";
    return passed ? 0 : 1;
}

int cmd_verify(const GlobalArgs& global, const std::string& check_name, const std::string& range) {
    int lo = 0, hi = 0;
    if (!range.empty()) {
        auto [l, h] = parse_range(range);
        lo = l;
        hi = h;
    }
    if (check_name == "all") {
        char* names = nullptr;
        check(ex_known_checks(&names));
        std::stringstream ss(take_string(names));
        std::string name;
        int worst = 0;
        while (std::getline(ss, name)) {
            int rc = run_verify(global, name, 0, 0);
            worst = std::max(worst, rc);
        }
        return worst;
    }
    return run_verify(global, check_name, lo, hi);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extended adjacency spectra: exact matrices, rankings, and exhaustive checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ex_version());

    GlobalArgs global;
    bool format_given = false;
    app.add_option("--format", global.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->each([&](const std::string&) { format_given = true; });
    app.add_option("--tol", global.tol, "eigensolver tolerance (default 1e-12)");
    app.add_option("--max-iter", global.max_iter, "power iteration cap (default 100000)");
    app.add_option("--jobs", global.jobs, "parallel workers for scans (default: all cores)");

    auto* compute = app.add_subcommand("compute", "compute quantities for one graph");
    GraphArgs gargs;
    std::string what = "eta1";
    std::string matrix = "extended";
    compute->add_option("--input", gargs.input, "edge-list file path");
    compute->add_option("--family", gargs.family,
                        "family name: P S C K_ab T1..T5 Z W H1..H6 spider double_star");
    compute->add_option("--n", gargs.n, "order for single-parameter families");
    compute->add_option("--a", gargs.a, "first parameter of K_ab / double_star");
    compute->add_option("--b", gargs.b, "second parameter of K_ab / double_star");
    compute->add_option("--legs", gargs.legs, "spider leg lengths, e.g. 1,2,2");
    compute->add_option("--what", what, "comma list of eta1,lambda1,energy,m1,f,bounds,charpoly");
    compute->add_option("--matrix", matrix, "charpoly matrix: extended or adjacency")
        ->check(CLI::IsMember({"extended", "adjacency"}));

    auto* enumerate = app.add_subcommand("enumerate", "enumerate trees or connected graphs");
    int en_n = 0;
    std::string en_kind = "trees";
    std::string en_emit = "count";
    bool en_dedup = false;
    enumerate->add_option("--n", en_n, "order")->required();
    enumerate->add_option("--kind", en_kind, "trees or graphs")
        ->check(CLI::IsMember({"trees", "graphs"}));
    enumerate->add_option("--emit", en_emit, "count, codes, or edges")
        ->check(CLI::IsMember({"count", "codes", "edges"}));
    enumerate->add_flag("--dedup", en_dedup, "one representative per isomorphism class (graphs)");

    auto* rank = app.add_subcommand("rank", "rank trees by extended spectral radius");
    int rk_n = 0, rk_top = 5, rk_bottom = 0;
    rank->add_option("--n", rk_n, "order")->required();
    rank->add_option("--top", rk_top, "how many top entries");
    rank->add_option("--bottom", rk_bottom, "how many bottom entries");

    auto* verify = app.add_subcommand("verify", "run a named verification check");
    std::string vf_check;
    std::string vf_range;
    verify->add_option("--check", vf_check, "check name, or 'all'")->required();
    verify->add_option("--n", vf_range, "order range, e.g. 5..14 or 12");

    auto* conjecture = app.add_subcommand("conjecture", "exhaustive maximum scan evidence");
    int cj_max_n = 7;
    conjecture->add_option("--max-n", cj_max_n, "largest order to scan (<= 7)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (compute->parsed()) return cmd_compute(global, gargs, what, matrix);
    if (enumerate->parsed())
        return cmd_enumerate(global, en_n, en_kind, en_dedup, en_emit, format_given);
    if (rank->parsed()) return cmd_rank(global, rk_n, rk_top, rk_bottom);
    if (verify->parsed()) return cmd_verify(global, vf_check, vf_range);
    if (conjecture->parsed()) return run_verify(global, "conjecture", 5, cj_max_n);
    return 2;
}
