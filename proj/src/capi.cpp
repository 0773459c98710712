#include "uwbpc/uwbpc.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

#include "errors.hpp"
#include "runners.hpp"

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_report;

uwbpc_status capture(const std::exception& e, uwbpc_status status) {
    g_last_error = e.what();
    return status;
}

template <typename Fn>
uwbpc_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const uwbpc::ParseError& e) {
        return capture(e, UWBPC_ERR_USAGE);
    } catch (const uwbpc::DomainError& e) {
        return capture(e, UWBPC_ERR_USAGE);
    } catch (const uwbpc::InfeasibleError& e) {
        return capture(e, UWBPC_ERR_INFEASIBLE);
    } catch (const uwbpc::EnsembleError& e) {
        return capture(e, UWBPC_ERR_ENSEMBLE);
    } catch (const uwbpc::SolverError& e) {
        return capture(e, UWBPC_ERR_SOLVER);
    } catch (const std::exception& e) {
        return capture(e, UWBPC_ERR_UNKNOWN);
    } catch (...) {
        g_last_error = "unknown error";
        return UWBPC_ERR_UNKNOWN;
    }
}

uwbpc_status from_outcome(uwbpc::RunOutcome outcome) {
    switch (outcome) {
        case uwbpc::RunOutcome::ok: return UWBPC_OK;
        case uwbpc::RunOutcome::infeasible: return UWBPC_ERR_INFEASIBLE;
        case uwbpc::RunOutcome::ensemble_failed: return UWBPC_ERR_ENSEMBLE;
    }
    return UWBPC_ERR_UNKNOWN;
}

}  // namespace

struct uwbpc_scenario {
    uwbpc::ScenarioDoc doc;
};

struct uwbpc_table {
    uwbpc::Table table;
};

extern "C" {

const char* uwbpc_version(void) { return "0.1.0"; }

const char* uwbpc_status_message(uwbpc_status status) {
    switch (status) {
        case UWBPC_OK: return "ok";
        case UWBPC_ERR_USAGE: return "usage or parse error";
        case UWBPC_ERR_INFEASIBLE: return "infeasible scenario";
        case UWBPC_ERR_ENSEMBLE: return "ensemble failure";
        case UWBPC_ERR_SOLVER: return "solver failure";
        case UWBPC_ERR_IO: return "i/o error";
        default: return "unknown error";
    }
}

const char* uwbpc_last_error(void) { return g_last_error.c_str(); }
const char* uwbpc_last_report(void) { return g_last_report.c_str(); }

uwbpc_status uwbpc_scenario_default(uwbpc_scenario** out) {
    if (!out) return UWBPC_ERR_USAGE;
    return guarded([&] {
        *out = new uwbpc_scenario{uwbpc::parse_scenario(uwbpc::default_scenario_text())};
        return UWBPC_OK;
    });
}

uwbpc_status uwbpc_scenario_parse(const char* json_text, uwbpc_scenario** out) {
    if (!json_text || !out) return UWBPC_ERR_USAGE;
    return guarded([&] {
        *out = new uwbpc_scenario{uwbpc::parse_scenario(json_text)};
        return UWBPC_OK;
    });
}

uwbpc_status uwbpc_scenario_load(const char* path, uwbpc_scenario** out) {
    if (!path || !out) return UWBPC_ERR_USAGE;
    return guarded([&] {
        *out = new uwbpc_scenario{uwbpc::load_scenario(path)};
        return UWBPC_OK;
    });
}

void uwbpc_scenario_free(uwbpc_scenario* scenario) { delete scenario; }

uwbpc_status uwbpc_mu(double lambda, double rho, double* out) {
    if (!out) return UWBPC_ERR_USAGE;
    return guarded([&] {
        *out = uwbpc::mu(lambda, rho);
        return UWBPC_OK;
    });
}

uwbpc_status uwbpc_nu(double lambda, double rho, double beta, double* out) {
    if (!out) return UWBPC_ERR_USAGE;
    return guarded([&] {
        *out = beta == 0.0 ? uwbpc::nu0(lambda, rho) : uwbpc::nu(lambda, rho, beta);
        return UWBPC_OK;
    });
}

uwbpc_status uwbpc_nu0(double lambda, double rho, double* out) {
    if (!out) return UWBPC_ERR_USAGE;
    return guarded([&] {
        *out = uwbpc::nu0(lambda, rho);
        return UWBPC_OK;
    });
}

uwbpc_status uwbpc_efficiency(double sinr, unsigned total_bits, double* out) {
    if (!out || total_bits == 0) return UWBPC_ERR_USAGE;
    return guarded([&] {
        *out = uwbpc::efficiency(sinr, (int)total_bits);
        return UWBPC_OK;
    });
}

uwbpc_status uwbpc_gamma_star(double zeta, unsigned total_bits, double* out) {
    if (!out || total_bits == 0) return UWBPC_ERR_USAGE;
    return guarded([&] {
        *out = uwbpc::gamma_star(zeta, (int)total_bits);
        return UWBPC_OK;
    });
}

uwbpc_status uwbpc_run_analyze(const uwbpc_scenario* scenario, const char* grid,
                               uwbpc_table** out) {
    if (!scenario || !out) return UWBPC_ERR_USAGE;
    g_last_report.clear();
    return guarded([&] {
        uwbpc::RunResult result = uwbpc::run_analyze(scenario->doc, grid ? grid : "");
        g_last_report = result.report;
        *out = new uwbpc_table{std::move(result.table)};
        return from_outcome(result.outcome);
    });
}

uwbpc_status uwbpc_run_simulate(const uwbpc_scenario* scenario, int workers,
                                const uint64_t* seed, uwbpc_table** out) {
    if (!scenario || !out) return UWBPC_ERR_USAGE;
    g_last_report.clear();
    return guarded([&] {
        std::optional<std::uint64_t> seed_override;
        if (seed) seed_override = *seed;
        uwbpc::RunResult result = uwbpc::run_simulate(scenario->doc, workers, seed_override);
        g_last_report = result.report;
        *out = new uwbpc_table{std::move(result.table)};
        return from_outcome(result.outcome);
    });
}

uwbpc_status uwbpc_run_loss(const uwbpc_scenario* scenario, const char* grid,
                            uwbpc_table** out) {
    if (!scenario || !out) return UWBPC_ERR_USAGE;
    g_last_report.clear();
    return guarded([&] {
        uwbpc::RunResult result = uwbpc::run_loss(scenario->doc, grid ? grid : "");
        g_last_report = result.report;
        *out = new uwbpc_table{std::move(result.table)};
        return from_outcome(result.outcome);
    });
}

size_t uwbpc_table_rows(const uwbpc_table* table) { return table ? table->table.rows() : 0; }
size_t uwbpc_table_cols(const uwbpc_table* table) { return table ? table->table.cols() : 0; }

const char* uwbpc_table_col_name(const uwbpc_table* table, size_t col) {
    if (!table || col >= table->table.cols()) return nullptr;
    return table->table.column_name(col).c_str();
}

uwbpc_status uwbpc_table_value(const uwbpc_table* table, size_t row, size_t col,
                               double* out) {
    if (!table || !out || row >= table->table.rows() || col >= table->table.cols())
        return UWBPC_ERR_USAGE;
    const auto& cell = table->table.at(row, col);
    if (!cell.numeric) {
        g_last_error = "cell is not numeric";
        return UWBPC_ERR_USAGE;
    }
    *out = cell.value;
    return UWBPC_OK;
}

const char* uwbpc_table_text(const uwbpc_table* table, size_t row, size_t col) {
    if (!table || row >= table->table.rows() || col >= table->table.cols()) return nullptr;
    return table->table.at(row, col).text.c_str();
}

uwbpc_status uwbpc_table_csv(const uwbpc_table* table, char** out) {
    if (!table || !out) return UWBPC_ERR_USAGE;
    return guarded([&] {
        const std::string csv = table->table.to_csv();
        char* buf = (char*)std::malloc(csv.size() + 1);
        if (!buf) {
            g_last_error = "out of memory";
            return UWBPC_ERR_UNKNOWN;
        }
        std::memcpy(buf, csv.c_str(), csv.size() + 1);
        *out = buf;
        return UWBPC_OK;
    });
}

void uwbpc_table_free(uwbpc_table* table) { delete table; }
void uwbpc_string_free(char* text) { std::free(text); }

}  // extern "C"
