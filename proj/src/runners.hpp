#pragma once

#include <optional>
#include <string>

#include "scenario.hpp"
#include "table.hpp"

namespace uwbpc {

// Library-side implementations of the CLI subcommands. Each produces the
// table behind one CSV document; outcome describes the worst condition met
// while the table itself stays complete (infeasible cells are marked in it).
enum class RunOutcome { ok, infeasible, ensemble_failed };

struct RunResult {
    Table table;
    RunOutcome outcome = RunOutcome::ok;
    std::string report;  // human-readable notes (skipped/infeasible cells, diagnostics)
};

// Closed-form analysis over a (lambda_db, rho, beta) grid; beta = 0 rows are
// the DS-CDMA limit. Grid axes default to the scenario's point values.
RunResult run_analyze(const ScenarioDoc& doc, const std::string& grid_spec);

// Monte Carlo sweep over run.processing_gains x modes x finger_fractions.
RunResult run_simulate(const ScenarioDoc& doc, int workers,
                       std::optional<std::uint64_t> seed_override);

// Closed-form loss table over an (N, K, L, rho) grid.
RunResult run_loss(const ScenarioDoc& doc, const std::string& grid_spec);

}  // namespace uwbpc
