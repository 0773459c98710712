#include "runners.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace uwbpc {

namespace {

const char* mode_name(AccessMode m) { return m == AccessMode::cdma ? "cdma" : "uwb"; }

Table::Cell opt_number(double v) { return Table::number(v); }

}  // namespace

RunResult run_analyze(const ScenarioDoc& doc, const std::string& grid_spec) {
    const auto axes = parse_grid(grid_spec, {"lambda_db", "rho", "beta"});
    const auto axis = [&](const char* name, std::vector<double> fallback) {
        const auto it = axes.find(name);
        return it != axes.end() ? it->second : fallback;
    };
    const std::vector<double> lambdas = axis("lambda_db", {linear_to_db(doc.channel.pdp_ratio)});
    const std::vector<double> rhos = axis("rho", {doc.rake.finger_fraction});
    const std::vector<double> betas =
        axis("beta", {(double)doc.rake.chips_per_frame / doc.channel.num_paths});

    RunResult result{Table{{"lambda_db", "rho", "beta", "mu", "nu", "nu0", "gamma_target",
                            "util_uwb_norm", "util_cdma_norm", "epsilon", "loss_db",
                            "feasible"}}, RunOutcome::ok, ""};
    int infeasible = 0;
    for (const double lambda_db : lambdas)
        for (const double rho : rhos)
            for (const double beta : betas) {
                AsymptoticInputs in;
                in.pdp_ratio = db_to_linear(lambda_db);
                in.finger_fraction = rho;
                in.load_factor = beta;
                in.processing_gain = doc.rake.processing_gain;
                in.num_users = doc.channel.num_users;
                in.game = doc.game;
                const AsymptoticReport rep = analyze_cell(in);
                if (!rep.feasible) ++infeasible;
                result.table.add_row({Table::number(lambda_db), Table::number(rho),
                                      Table::number(beta), Table::number(rep.mu),
                                      Table::number(rep.nu), Table::number(rep.nu0),
                                      Table::number(rep.gamma_target),
                                      opt_number(rep.utility_uwb),
                                      opt_number(rep.utility_cdma),
                                      opt_number(rep.epsilon), opt_number(rep.loss_db),
                                      Table::integer(rep.feasible ? 1 : 0)});
            }
    if (infeasible > 0) {
        result.outcome = RunOutcome::infeasible;
        std::ostringstream os;
        os << infeasible << " infeasible grid cell(s); closed-form fields are nan there\n";
        result.report = os.str();
    }
    return result;
}

RunResult run_simulate(const ScenarioDoc& doc, int workers,
                       std::optional<std::uint64_t> seed_override) {
    Scenario base = doc.base_scenario(AccessMode::uwb);
    if (seed_override) base.master_seed = *seed_override;

    std::vector<ModeSpec> modes;
    for (const AccessMode m : doc.run.modes) {
        if (m == AccessMode::cdma) {
            modes.push_back({AccessMode::cdma, 1});
        } else if (doc.run.chips_per_frame.empty()) {
            modes.push_back({AccessMode::uwb, doc.rake.chips_per_frame});
        } else {
            for (const int chips : doc.run.chips_per_frame)
                modes.push_back({AccessMode::uwb, chips});
        }
    }

    const auto rows = sweep_gain(base, doc.run.processing_gains, modes,
                                 doc.run.finger_fractions, workers);

    RunResult result{Table{{"N", "Nf", "Nc", "K", "L", "rho", "mode", "n_real",
                            "mean_util_norm", "stderr", "closed_form_util_norm",
                            "rel_gap", "loss_db_pair"}}, RunOutcome::ok, ""};
    std::ostringstream report;
    int infeasible = 0, failed = 0, skipped = 0;
    for (const SweepRow& row : rows) {
        if (row.skipped) {
            ++skipped;
            report << "skipped cell N=" << row.stats.processing_gain
                   << " Nc=" << row.stats.chips_per_frame << ": " << row.note << "\n";
            continue;
        }
        const AggregateStats& s = row.stats;
        result.table.add_row(
            {Table::integer(s.processing_gain),
             Table::number((double)s.processing_gain / s.chips_per_frame),
             Table::integer(s.chips_per_frame), Table::integer(s.num_users),
             Table::integer(s.num_paths), Table::number(s.finger_fraction),
             Table::text(mode_name(s.mode)), Table::integer(s.n),
             Table::number(s.mean_normalized_utility), Table::number(s.std_error),
             Table::number(row.closed_form), Table::number(row.rel_gap),
             Table::number(row.loss_db_pair)});
        if (!row.feasible) {
            ++infeasible;
            report << "infeasible cell N=" << s.processing_gain << " Nc=" << s.chips_per_frame
                   << " rho=" << s.finger_fraction << ": closed form undefined\n";
        }
        if (s.failed) {
            ++failed;
            report << "failed cell N=" << s.processing_gain << " Nc=" << s.chips_per_frame
                   << " rho=" << s.finger_fraction << ": " << s.nonconverged_count << "/"
                   << s.n << " non-converged equilibria\n";
        }
        if (s.zeta_violation_count > 0)
            report << "diagnostic: " << s.zeta_violation_count
                   << " zeta<1 user-realizations in cell N=" << s.processing_gain
                   << " Nc=" << s.chips_per_frame << " rho=" << s.finger_fraction << "\n";
        if (s.rejection_count > 0)
            report << "diagnostic: " << s.rejection_count
                   << " degenerate realizations resampled\n";
    }
    if (failed > 0)
        result.outcome = RunOutcome::ensemble_failed;
    else if (infeasible > 0)
        result.outcome = RunOutcome::infeasible;
    result.report = report.str();
    return result;
}

RunResult run_loss(const ScenarioDoc& doc, const std::string& grid_spec) {
    const auto axes = parse_grid(grid_spec, {"N", "K", "L", "rho"});
    LossAxes loss_axes;
    const auto ints = [&](const char* name) {
        std::vector<int> out;
        const auto it = axes.find(name);
        if (it == axes.end()) return out;
        for (const double v : it->second) {
            const int i = (int)std::llround(v);
            if (i < 1 || std::abs(v - i) > 1e-9)
                throw ParseError(std::string("axis \"") + name +
                                 "\" requires positive integers");
            out.push_back(i);
        }
        return out;
    };
    loss_axes.gains = ints("N");
    loss_axes.users = ints("K");
    loss_axes.paths = ints("L");
    if (const auto it = axes.find("rho"); it != axes.end())
        loss_axes.finger_fractions = it->second;

    const Scenario base = doc.base_scenario(AccessMode::uwb);
    const auto rows = sweep_loss(base, loss_axes);

    RunResult result{Table{{"N", "K", "L", "rho", "Nc", "beta", "lambda_db",
                            "gamma_target", "epsilon", "loss_db", "feasible"}}, RunOutcome::ok, ""};
    int infeasible = 0;
    for (const LossRow& row : rows) {
        if (!row.feasible) ++infeasible;
        result.table.add_row(
            {Table::integer(row.processing_gain), Table::integer(row.num_users),
             Table::integer(row.num_paths), Table::number(row.finger_fraction),
             Table::integer(row.chips_per_frame), Table::number(row.load_factor),
             Table::number(linear_to_db(base.channel.pdp_ratio)),
             Table::number(row.gamma_target), Table::number(row.epsilon),
             Table::number(row.loss_db), Table::integer(row.feasible ? 1 : 0)});
    }
    if (infeasible > 0) {
        result.outcome = RunOutcome::infeasible;
        std::ostringstream os;
        os << infeasible << " infeasible cell(s); loss fields are nan there\n";
        result.report = os.str();
    }
    return result;
}

}  // namespace uwbpc
