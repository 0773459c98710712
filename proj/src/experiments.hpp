#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "channel.hpp"
#include "game.hpp"
#include "rake.hpp"

namespace uwbpc {

// One Monte Carlo configuration: channel ensemble + receiver + game.
// In CDMA mode chips_per_frame is forced to 1 (the processing gain is then
// all frames); in UWB mode it is taken from the rake config.
struct Scenario {
    ChannelConfig channel;
    RakeConfig rake;
    GameParams game;
    AccessMode mode = AccessMode::uwb;
    int n_realizations = 2000;
    std::uint64_t master_seed = 1;
};

struct AggregateStats {
    // cell identity
    AccessMode mode = AccessMode::uwb;
    int processing_gain = 0;
    int chips_per_frame = 0;
    int num_users = 0;
    int num_paths = 0;
    double finger_fraction = 1.0;
    double pdp_ratio = 0.0;
    int n = 0;

    double mean_normalized_utility = 0.0;  // mean over users and realizations of u*/h_sp
    double std_error = 0.0;                // of the per-realization means
    int rejection_count = 0;               // resampled degenerate realizations
    int nonconverged_count = 0;
    int zeta_violation_count = 0;          // realizations x users with zeta < 1
    bool failed = false;                   // non-convergence budget exceeded (>1%)
};

// Runs one ensemble. Deterministic in master_seed regardless of the worker
// count (per-realization substreams, fixed-order reduction). Throws
// EnsembleError if valid realizations cannot be produced.
AggregateStats run_ensemble(const Scenario& scenario, int workers = 1);

// A (mode, chips_per_frame) column of a gain sweep; cdma implies N_c = 1.
struct ModeSpec {
    AccessMode mode = AccessMode::uwb;
    int chips_per_frame = 1;
};

struct SweepRow {
    AggregateStats stats;
    double closed_form = 0.0;        // asymptotic normalized utility
    double rel_gap = 0.0;            // (mc - closed_form)/closed_form
    double loss_db_pair = 0.0;       // empirical paired loss vs the CDMA cell
    double closed_form_loss_db = 0.0;
    bool feasible = false;           // closed form defined at this cell
    bool skipped = false;
    std::string note;
};

// Monte Carlo sweep over processing gains x modes x finger fractions with
// common channel realizations across all cells (paired estimates). One row
// per (N, mode, rho). Cells with chips_per_frame > N are skipped with a note.
std::vector<SweepRow> sweep_gain(const Scenario& base, const std::vector<int>& gains,
                                 const std::vector<ModeSpec>& modes,
                                 const std::vector<double>& finger_fractions,
                                 int workers = 1);

struct LossAxes {
    std::vector<int> gains;            // N
    std::vector<int> users;            // K
    std::vector<int> paths;            // L
    std::vector<double> finger_fractions;
};

struct LossRow {
    int processing_gain = 0;
    int num_users = 0;
    int num_paths = 0;
    double finger_fraction = 1.0;
    int chips_per_frame = 0;
    double load_factor = 0.0;
    double gamma_target = 0.0;
    double epsilon = 0.0;
    double loss_db = 0.0;
    bool feasible = false;
};

// Closed-form loss table over (N, K, L, rho); lambda and N_c come from the
// scenario. Infeasible cells are marked, not dropped.
std::vector<LossRow> sweep_loss(const Scenario& base, const LossAxes& axes);

}  // namespace uwbpc
