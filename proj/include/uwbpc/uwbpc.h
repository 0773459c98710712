/*
 * uwbpc - energy-efficient power control games over multipath channels.
 *
 * C interface of the shared library. The core computes Nash equilibria of a
 * noncooperative uplink power control game for DS-CDMA and IR-UWB multiple
 * access with Rake reception, plus the matching dense-multipath closed forms
 * (mu, nu, nu0, target SINR, normalized utility, CDMA-vs-UWB loss).
 *
 * All entry points return uwbpc_status; on failure uwbpc_last_error() gives
 * a thread-local description. Handles are opaque and freed with their
 * matching *_free function.
 */
#ifndef UWBPC_H
#define UWBPC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(UWBPC_BUILD)
#define UWBPC_API __declspec(dllexport)
#else
#define UWBPC_API __declspec(dllimport)
#endif
#else
#define UWBPC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uwbpc_status {
    UWBPC_OK = 0,
    UWBPC_ERR_USAGE = 1,       /* bad argument, parse error, domain error */
    UWBPC_ERR_INFEASIBLE = 2,  /* closed form undefined at >= 1 cell */
    UWBPC_ERR_ENSEMBLE = 3,    /* ensemble exceeded its failure budget */
    UWBPC_ERR_SOLVER = 4,      /* root finder could not bracket/converge */
    UWBPC_ERR_IO = 5,          /* file could not be read/written */
    UWBPC_ERR_UNKNOWN = 99
} uwbpc_status;

UWBPC_API const char* uwbpc_version(void);
UWBPC_API const char* uwbpc_status_message(uwbpc_status status);
/* Thread-local detail of the most recent failure in this thread. */
UWBPC_API const char* uwbpc_last_error(void);

/* ---- scenarios ------------------------------------------------------- */

typedef struct uwbpc_scenario uwbpc_scenario;

/* Stock parameters (10 users, 200 paths, 20 dB profile ratio, 100-bit
 * packets at 100 kb/s, -153 dBW noise, 1 uW cap). */
UWBPC_API uwbpc_status uwbpc_scenario_default(uwbpc_scenario** out);
UWBPC_API uwbpc_status uwbpc_scenario_parse(const char* json_text, uwbpc_scenario** out);
UWBPC_API uwbpc_status uwbpc_scenario_load(const char* path, uwbpc_scenario** out);
UWBPC_API void uwbpc_scenario_free(uwbpc_scenario* scenario);

/* ---- closed-form layer (lambda is linear here, not dB) ---------------- */

UWBPC_API uwbpc_status uwbpc_mu(double lambda, double rho, double* out);
UWBPC_API uwbpc_status uwbpc_nu(double lambda, double rho, double beta, double* out);
UWBPC_API uwbpc_status uwbpc_nu0(double lambda, double rho, double* out);
/* Packet success rate (1 - exp(-sinr/2))^total_bits. */
UWBPC_API uwbpc_status uwbpc_efficiency(double sinr, unsigned total_bits, double* out);
/* Utility-maximizing target SINR for an interference ceiling zeta (may be
 * HUGE_VAL). */
UWBPC_API uwbpc_status uwbpc_gamma_star(double zeta, unsigned total_bits, double* out);

/* ---- runners ----------------------------------------------------------
 * Each runner produces a result table (one CSV document). On
 * UWBPC_ERR_INFEASIBLE / UWBPC_ERR_ENSEMBLE the table is still produced with
 * the affected cells marked; any other error yields no table.
 * grid: semicolon-separated axes "name=v1,v2,..." or "name=start:stop:step";
 * NULL or "" uses the scenario's point values. Axes: analyze accepts
 * lambda_db, rho, beta; loss accepts N, K, L, rho. */

typedef struct uwbpc_table uwbpc_table;

UWBPC_API uwbpc_status uwbpc_run_analyze(const uwbpc_scenario* scenario, const char* grid,
                                         uwbpc_table** out);
/* workers <= 0 uses one thread per hardware core; the output is identical
 * for every worker count. seed: NULL keeps the scenario seed. */
UWBPC_API uwbpc_status uwbpc_run_simulate(const uwbpc_scenario* scenario, int workers,
                                          const uint64_t* seed, uwbpc_table** out);
UWBPC_API uwbpc_status uwbpc_run_loss(const uwbpc_scenario* scenario, const char* grid,
                                      uwbpc_table** out);

/* Diagnostics accumulated by the most recent runner call in this thread
 * (skipped cells, infeasible cells, zeta<1 counts); empty string if none. */
UWBPC_API const char* uwbpc_last_report(void);

/* ---- tables ----------------------------------------------------------- */

UWBPC_API size_t uwbpc_table_rows(const uwbpc_table* table);
UWBPC_API size_t uwbpc_table_cols(const uwbpc_table* table);
UWBPC_API const char* uwbpc_table_col_name(const uwbpc_table* table, size_t col);
/* Numeric value of a cell; UWBPC_ERR_USAGE for text cells or out-of-range
 * indices. */
UWBPC_API uwbpc_status uwbpc_table_value(const uwbpc_table* table, size_t row, size_t col,
                                         double* out);
/* Formatted cell exactly as it appears in the CSV; NULL when out of range.
 * The pointer stays valid for the lifetime of the table. */
UWBPC_API const char* uwbpc_table_text(const uwbpc_table* table, size_t row, size_t col);
/* Whole CSV document; free with uwbpc_string_free. */
UWBPC_API uwbpc_status uwbpc_table_csv(const uwbpc_table* table, char** out);
UWBPC_API void uwbpc_table_free(uwbpc_table* table);
UWBPC_API void uwbpc_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* UWBPC_H */
