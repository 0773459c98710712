#include "experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "errors.hpp"

namespace uwbpc {

namespace {

constexpr double kFailedFraction = 0.01;  // non-convergence budget
constexpr int kMaxResamples = 100;

struct CellDef {
    AccessMode mode;
    int processing_gain;
    int chips_per_frame;
    int rho_index;  // into the distinct finger-fraction list
    double finger_fraction;
};

struct CellAccum {
    std::vector<double> value;   // per realization: mean_k u*_k / h_sp_k
    std::vector<int> nonconv;    // per realization
    std::vector<int> zeta_viol;  // per realization
};

// Runs all cells over n shared channel realizations. Work is split by
// realization; each worker writes only slots indexed by its realization, and
// the reduction afterwards walks realizations in order, so results do not
// depend on the worker count.
void run_cells(const ChannelConfig& channel, const GameParams& game,
               const std::vector<double>& rhos, const std::vector<CellDef>& cells,
               int n, std::uint64_t seed, int workers, std::vector<CellAccum>& accums,
               std::vector<int>& rejections) {
    channel.validate();
    game.validate();
    if (n < 1) throw DomainError("n_realizations must be >= 1");

    accums.assign(cells.size(), CellAccum{});
    for (auto& a : accums) {
        a.value.assign(n, 0.0);
        a.nonconv.assign(n, 0);
        a.zeta_viol.assign(n, 0);
    }
    rejections.assign(n, 0);

    ChannelConfig cfg = channel;
    cfg.seed = seed;

    std::atomic<int> next{0};
    std::atomic<bool> aborted{false};
    std::string first_error;
    std::mutex error_mutex;

    auto work = [&]() {
        for (;;) {
            const int r = next.fetch_add(1);
            if (r >= n || aborted.load()) return;
            try {
                // Resample the whole realization if any finger mask captures
                // zero energy, so all cells keep seeing identical channels.
                int attempt = 0;
                ChannelSet set;
                std::vector<GainBasis> bases(rhos.size());
                for (;;) {
                    set = draw_channels(cfg, (std::uint64_t)r, (std::uint32_t)attempt);
                    try {
                        for (std::size_t i = 0; i < rhos.size(); ++i)
                            bases[i] = compute_gain_basis(set, rhos[i]);
                        break;
                    } catch (const DegenerateChannelError&) {
                        ++rejections[r];
                        if (++attempt > kMaxResamples)
                            throw EnsembleError("could not draw a non-degenerate realization");
                    }
                }
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    const CellDef& cell = cells[c];
                    RakeConfig rake;
                    rake.finger_fraction = cell.finger_fraction;
                    rake.chips_per_frame = cell.chips_per_frame;
                    rake.processing_gain = cell.processing_gain;
                    const GainSet gains = finalize_gains(bases[cell.rho_index], rake);
                    const NashOutcome eq = solve_equilibrium(gains, game);
                    double mean_norm = 0.0;
                    for (int k = 0; k < gains.num_users(); ++k)
                        mean_norm += eq.utilities[k] / gains.h_sp[k];
                    mean_norm /= gains.num_users();
                    accums[c].value[r] = mean_norm;
                    accums[c].nonconv[r] = eq.converged ? 0 : 1;
                    accums[c].zeta_viol[r] = gains.zeta_violations;
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (first_error.empty()) first_error = e.what();
                aborted.store(true);
                return;
            }
        }
    };

    int nthreads = workers;
    if (nthreads <= 0) nthreads = (int)std::thread::hardware_concurrency();
    nthreads = std::clamp(nthreads, 1, n);
    if (nthreads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (aborted.load()) throw EnsembleError(first_error);
}

AggregateStats reduce_cell(const CellDef& cell, const ChannelConfig& channel,
                           const CellAccum& accum, const std::vector<int>& rejections) {
    const int n = (int)accum.value.size();
    AggregateStats s;
    s.mode = cell.mode;
    s.processing_gain = cell.processing_gain;
    s.chips_per_frame = cell.chips_per_frame;
    s.num_users = channel.num_users;
    s.num_paths = channel.num_paths;
    s.finger_fraction = cell.finger_fraction;
    s.pdp_ratio = channel.pdp_ratio;
    s.n = n;

    double sum = 0.0;
    for (int r = 0; r < n; ++r) sum += accum.value[r];
    s.mean_normalized_utility = sum / n;
    if (n >= 2) {
        double ss = 0.0;
        for (int r = 0; r < n; ++r) {
            const double d = accum.value[r] - s.mean_normalized_utility;
            ss += d * d;
        }
        s.std_error = std::sqrt(ss / ((double)n * (n - 1)));
    }
    for (int r = 0; r < n; ++r) {
        s.nonconverged_count += accum.nonconv[r];
        s.zeta_violation_count += accum.zeta_viol[r];
        s.rejection_count += rejections[r];
    }
    s.failed = s.nonconverged_count > kFailedFraction * n;
    return s;
}

int effective_chips(const Scenario& s) {
    return s.mode == AccessMode::cdma ? 1 : s.rake.chips_per_frame;
}

}  // namespace

AggregateStats run_ensemble(const Scenario& scenario, int workers) {
    CellDef cell;
    cell.mode = scenario.mode;
    cell.processing_gain = scenario.rake.processing_gain;
    cell.chips_per_frame = effective_chips(scenario);
    cell.rho_index = 0;
    cell.finger_fraction = scenario.rake.finger_fraction;

    RakeConfig check = scenario.rake;
    check.chips_per_frame = cell.chips_per_frame;
    check.validate();

    std::vector<CellAccum> accums;
    std::vector<int> rejections;
    run_cells(scenario.channel, scenario.game, {cell.finger_fraction}, {cell},
              scenario.n_realizations, scenario.master_seed, workers, accums, rejections);
    return reduce_cell(cell, scenario.channel, accums[0], rejections);
}

std::vector<SweepRow> sweep_gain(const Scenario& base, const std::vector<int>& gains,
                                 const std::vector<ModeSpec>& modes,
                                 const std::vector<double>& finger_fractions,
                                 int workers) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> rhos = finger_fractions;
    if (rhos.empty()) rhos.push_back(base.rake.finger_fraction);

    std::vector<SweepRow> rows;
    std::vector<CellDef> cells;
    std::vector<std::size_t> row_of_cell;
    for (const int N : gains) {
        for (const ModeSpec& m : modes) {
            const int chips = m.mode == AccessMode::cdma ? 1 : m.chips_per_frame;
            for (std::size_t ri = 0; ri < rhos.size(); ++ri) {
                SweepRow row;
                row.stats.mode = m.mode;
                row.stats.processing_gain = N;
                row.stats.chips_per_frame = chips;
                row.stats.num_users = base.channel.num_users;
                row.stats.num_paths = base.channel.num_paths;
                row.stats.finger_fraction = rhos[ri];
                row.stats.pdp_ratio = base.channel.pdp_ratio;
                row.closed_form = row.rel_gap = row.loss_db_pair = nan;
                row.closed_form_loss_db = nan;
                if (chips > N) {
                    row.skipped = true;
                    row.note = "chips_per_frame exceeds processing gain";
                    rows.push_back(row);
                    continue;
                }
                CellDef cell;
                cell.mode = m.mode;
                cell.processing_gain = N;
                cell.chips_per_frame = chips;
                cell.rho_index = (int)ri;
                cell.finger_fraction = rhos[ri];
                cells.push_back(cell);
                row_of_cell.push_back(rows.size());
                rows.push_back(row);
            }
        }
    }

    std::vector<CellAccum> accums;
    std::vector<int> rejections;
    if (!cells.empty())
        run_cells(base.channel, base.game, rhos, cells, base.n_realizations,
                  base.master_seed, workers, accums, rejections);

    for (std::size_t c = 0; c < cells.size(); ++c)
        rows[row_of_cell[c]].stats = reduce_cell(cells[c], base.channel, accums[c], rejections);

    // Closed forms and paired empirical loss (the CDMA cell with the same
    // (N, rho) shares every channel realization by construction).
    for (SweepRow& row : rows) {
        if (row.skipped) continue;
        AsymptoticInputs in;
        in.pdp_ratio = base.channel.pdp_ratio;
        in.finger_fraction = row.stats.finger_fraction;
        in.load_factor = row.stats.mode == AccessMode::cdma
                             ? 0.0
                             : (double)row.stats.chips_per_frame / base.channel.num_paths;
        in.processing_gain = row.stats.processing_gain;
        in.num_users = base.channel.num_users;
        in.game = base.game;
        const AsymptoticReport rep = analyze_cell(in);
        row.feasible = rep.feasible;
        if (rep.feasible) {
            row.closed_form = row.stats.mode == AccessMode::cdma ? rep.utility_cdma
                                                                 : rep.utility_uwb;
            row.rel_gap = (row.stats.mean_normalized_utility - row.closed_form) /
                          row.closed_form;
            row.closed_form_loss_db = row.stats.mode == AccessMode::cdma ? 0.0 : rep.loss_db;
        }
        if (row.stats.mode == AccessMode::cdma) {
            row.loss_db_pair = 0.0;
        } else {
            for (const SweepRow& other : rows) {
                if (other.skipped || other.stats.mode != AccessMode::cdma) continue;
                if (other.stats.processing_gain != row.stats.processing_gain) continue;
                if (other.stats.finger_fraction != row.stats.finger_fraction) continue;
                row.loss_db_pair = 10.0 * std::log10(row.stats.mean_normalized_utility /
                                                     other.stats.mean_normalized_utility);
                break;
            }
        }
    }
    return rows;
}

std::vector<LossRow> sweep_loss(const Scenario& base, const LossAxes& axes) {
    const int chips = effective_chips(base);
    std::vector<int> gains = axes.gains.empty()
                                 ? std::vector<int>{base.rake.processing_gain}
                                 : axes.gains;
    std::vector<int> users = axes.users.empty() ? std::vector<int>{base.channel.num_users}
                                                : axes.users;
    std::vector<int> paths = axes.paths.empty() ? std::vector<int>{base.channel.num_paths}
                                                : axes.paths;
    std::vector<double> rhos = axes.finger_fractions.empty()
                                   ? std::vector<double>{base.rake.finger_fraction}
                                   : axes.finger_fractions;

    std::vector<LossRow> rows;
    for (const int N : gains)
        for (const int K : users)
            for (const int L : paths)
                for (const double rho : rhos) {
                    LossRow row;
                    row.processing_gain = N;
                    row.num_users = K;
                    row.num_paths = L;
                    row.finger_fraction = rho;
                    row.chips_per_frame = chips;
                    row.load_factor = (double)chips / L;

                    AsymptoticInputs in;
                    in.pdp_ratio = base.channel.pdp_ratio;
                    in.finger_fraction = rho;
                    in.load_factor = row.load_factor;
                    in.processing_gain = N;
                    in.num_users = K;
                    in.game = base.game;
                    const AsymptoticReport rep = analyze_cell(in);
                    row.gamma_target = rep.gamma_target;
                    row.feasible = rep.feasible;
                    row.epsilon = rep.epsilon;
                    row.loss_db = rep.loss_db;
                    rows.push_back(row);
                }
    return rows;
}

}  // namespace uwbpc
