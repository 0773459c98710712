// Command-line front end. Links only the C API of libuwbpc: scenario files
// in, CSV tables out.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uwbpc/uwbpc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitEnsemble = 3;

int exit_code(uwbpc_status status) {
    switch (status) {
        case UWBPC_OK: return kExitOk;
        case UWBPC_ERR_INFEASIBLE: return kExitInfeasible;
        case UWBPC_ERR_ENSEMBLE: return kExitEnsemble;
        default: return kExitUsage;
    }
}

uwbpc_status load_scenario(const std::string& path, uwbpc_scenario** scenario) {
    if (path.empty()) return uwbpc_scenario_default(scenario);
    return uwbpc_scenario_load(path.c_str(), scenario);
}

// Emits the finished table; nothing is written when the run errored out
// before producing one, so a bad run never leaves a partial CSV behind.
int emit(uwbpc_status status, uwbpc_table* table, const std::string& out_path) {
    const char* report = uwbpc_last_report();
    if (report && *report) std::cerr << report;
    if (!table) {
        std::cerr << "error: " << uwbpc_last_error() << "\n";
        return exit_code(status);
    }
    char* csv = nullptr;
    const uwbpc_status csv_status = uwbpc_table_csv(table, &csv);
    if (csv_status != UWBPC_OK) {
        std::cerr << "error: " << uwbpc_last_error() << "\n";
        uwbpc_table_free(table);
        return exit_code(csv_status);
    }
    if (out_path.empty() || out_path == "-") {
        std::fputs(csv, stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out || !(out << csv)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            uwbpc_string_free(csv);
            uwbpc_table_free(table);
            return kExitUsage;
        }
    }
    uwbpc_string_free(csv);
    uwbpc_table_free(table);
    if (status != UWBPC_OK)
        std::cerr << "status: " << uwbpc_status_message(status) << "\n";
    return exit_code(status);
}

int default_workers() {
    if (const char* env = std::getenv("UWBPC_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // library picks hardware concurrency
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy-efficient power control for CDMA / IR-UWB uplinks: "
                 "Nash equilibrium simulation and closed-form analysis"};
    app.require_subcommand(1);

    std::string scenario_path, grid, out_path;
    int workers = default_workers();
    std::optional<std::uint64_t> seed;

    auto* analyze = app.add_subcommand(
        "analyze", "Closed-form table (mu, nu, nu0, utilities, loss) over a grid");
    analyze->add_option("scenario", scenario_path, "Scenario JSON (omit for defaults)");
    analyze->add_option("--grid", grid,
                        "Axes lambda_db, rho, beta; e.g. \"rho=0.05:1:0.05;beta=0,0.25,1\"");
    analyze->add_option("--out,-o", out_path, "CSV path (default stdout)");

    auto* simulate = app.add_subcommand(
        "simulate", "Monte Carlo sweep over processing gains, modes and finger fractions");
    simulate->add_option("scenario", scenario_path, "Scenario JSON (omit for defaults)");
    simulate->add_option("--out,-o", out_path, "CSV path (default stdout)");
    simulate->add_option("--workers,-j", workers,
                         "Worker threads (default $UWBPC_WORKERS or all cores)");
    simulate->add_option("--seed", seed, "Master seed override");

    auto* loss = app.add_subcommand("loss", "Closed-form CDMA-vs-UWB loss over a grid");
    loss->add_option("scenario", scenario_path, "Scenario JSON (omit for defaults)");
    loss->add_option("--grid", grid, "Axes N, K, L, rho; e.g. \"N=200:1000:100;K=10,20\"");
    loss->add_option("--out,-o", out_path, "CSV path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    uwbpc_scenario* scenario = nullptr;
    const uwbpc_status load_status = load_scenario(scenario_path, &scenario);
    if (load_status != UWBPC_OK) {
        std::cerr << "error: " << uwbpc_last_error() << "\n";
        return kExitUsage;
    }

    uwbpc_table* table = nullptr;
    uwbpc_status status = UWBPC_ERR_UNKNOWN;
    if (analyze->parsed()) {
        status = uwbpc_run_analyze(scenario, grid.c_str(), &table);
    } else if (simulate->parsed()) {
        const uint64_t seed_value = seed.value_or(0);
        status = uwbpc_run_simulate(scenario, workers, seed ? &seed_value : nullptr, &table);
    } else if (loss->parsed()) {
        status = uwbpc_run_loss(scenario, grid.c_str(), &table);
    }
    const int code = emit(status, table, out_path);
    uwbpc_scenario_free(scenario);
    return code;
}
