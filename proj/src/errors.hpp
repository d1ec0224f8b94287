#pragma once

#include <stdexcept>
#include <string>

namespace exspectra {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct DisconnectedError : std::invalid_argument {
    explicit DisconnectedError(const std::string& what) : std::invalid_argument(what) {}
};

struct IsolatedVertexError : std::invalid_argument {
    int vertex;
    explicit IsolatedVertexError(int v)
        : std::invalid_argument("vertex " + std::to_string(v) + " is isolated"), vertex(v) {}
};

struct NotATreeError : std::invalid_argument {
    explicit NotATreeError(const std::string& what) : std::invalid_argument(what) {}
};

struct ConvergenceError : std::runtime_error {
    double best_value;
    double residual;
    int iterations;
    ConvergenceError(double value, double resid, int iters)
        : std::runtime_error("no convergence after " + std::to_string(iters) +
                             " iterations (residual " + std::to_string(resid) + ")"),
          best_value(value),
          residual(resid),
          iterations(iters) {}
};

// Two ranked values closer than the adjudication threshold; ordering by
// floating point would be noise, so this is a hard stop.
struct MinGapError : std::runtime_error {
    double gap;
    MinGapError(double g, const std::string& what) : std::runtime_error(what), gap(g) {}
};

}  // namespace exspectra
