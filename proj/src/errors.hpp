#pragma once

#include <stdexcept>
#include <string>

namespace uwbpc {

// Parameter outside the supported domain (lambda <= 1, rho out of (0,1], ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Root finder could not bracket or converge.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed-form pre-condition violated: the network cannot support the target
// SINRs at the equilibrium (utility bracket would be non-positive).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Channel realization with zero captured signal energy; the ensemble runner
// catches this, resamples and counts the rejection.
struct DegenerateChannelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ensemble exceeded its non-convergence budget (or could not produce valid
// realizations at all).
struct EnsembleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scenario file / grid spec syntax error.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line = 0, int column = 0)
        : std::runtime_error(msg), line(line), column(column) {}
    int line;
    int column;
};

}  // namespace uwbpc
