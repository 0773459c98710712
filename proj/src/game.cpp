#include "game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"

namespace uwbpc {

void GameParams::validate() const {
    if (total_bits < 1) throw DomainError("total_bits must be >= 1");
    if (info_bits < 1 || info_bits > total_bits)
        throw DomainError("info_bits must be in 1..total_bits");
    if (!(rate > 0.0)) throw DomainError("rate must be > 0");
    if (!(noise_power > 0.0)) throw DomainError("noise_power must be > 0");
    if (!(max_power > 0.0)) throw DomainError("max_power must be > 0");
}

double efficiency(double sinr, int total_bits) {
    if (sinr < 0.0) throw DomainError("sinr must be >= 0");
    return std::pow(-std::expm1(-sinr / 2.0), total_bits);
}

double efficiency_derivative(double sinr, int total_bits) {
    if (sinr < 0.0) throw DomainError("sinr must be >= 0");
    const double inner = -std::expm1(-sinr / 2.0);
    return 0.5 * total_bits * std::exp(-sinr / 2.0) * std::pow(inner, total_bits - 1);
}

double utility(double power, double sinr, const GameParams& params) {
    if (power < 0.0) throw DomainError("power must be >= 0");
    if (power == 0.0) return 0.0;
    const double psr = efficiency(sinr, params.total_bits);
    return (double)params.info_bits / params.total_bits * params.rate * psr / power;
}

double gamma_star(double zeta, int total_bits) {
    if (!(zeta > 0.0)) throw DomainError("zeta must be > 0");
    const double M = (double)total_bits;
    const auto q = [&](double g) {
        return 0.5 * M * g / std::expm1(g / 2.0) * (1.0 - g / zeta) - 1.0;
    };
    // q(0+) = M - 1, q is strictly decreasing, q -> -1 at the upper end.
    double lo = 1e-9;
    if (!(q(lo) > 0.0))
        throw SolverError("no bracket for target SINR (zeta=" + std::to_string(zeta) +
                          ", total_bits=" + std::to_string(total_bits) + ")");
    double hi;
    if (std::isfinite(zeta)) {
        hi = zeta * (1.0 - 1e-12);
        if (!(q(hi) < 0.0))
            throw SolverError("upper bracket failed at zeta=" + std::to_string(zeta));
    } else {
        hi = 1.0;
        while (q(hi) > 0.0) {
            hi *= 2.0;
            if (hi > 1e9) throw SolverError("target SINR bracket runaway");
        }
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval at floating-point resolution
        (q(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> compute_sinrs(const GainSet& gains, const std::vector<double>& powers,
                                  double noise_power) {
    const int K = gains.num_users();
    std::vector<double> sinrs(K);
    for (int k = 0; k < K; ++k) {
        double interference = gains.h_si[k] * powers[k] + noise_power;
        for (int j = 0; j < K; ++j)
            if (j != k) interference += gains.h_mai[k][j] * powers[j];
        sinrs[k] = gains.h_sp[k] * powers[k] / interference;
    }
    return sinrs;
}

double best_response(int user, const std::vector<double>& powers, const GainSet& gains,
                     double gamma_target, const GameParams& params) {
    if (!(gamma_target < gains.zeta[user]))
        throw SolverError("gamma_target >= zeta; target SINR invariant violated");
    double mai = params.noise_power;
    for (int j = 0; j < gains.num_users(); ++j)
        if (j != user) mai += gains.h_mai[user][j] * powers[j];
    const double p =
        gamma_target * mai / (gains.h_sp[user] * (1.0 - gamma_target / gains.zeta[user]));
    return std::min(p, params.max_power);
}

NashOutcome solve_equilibrium(const GainSet& gains, const GameParams& params,
                              const SolveOptions& options) {
    params.validate();
    const int K = gains.num_users();

    NashOutcome out;
    out.gamma_targets.resize(K);
    for (int k = 0; k < K; ++k)
        out.gamma_targets[k] = gamma_star(gains.zeta[k], params.total_bits);

    out.powers.assign(K, options.initial_power);
    for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
        double max_change = 0.0;
        for (int k = 0; k < K; ++k) {
            const double next = best_response(k, out.powers, gains, out.gamma_targets[k], params);
            const double rel =
                std::abs(next - out.powers[k]) / std::max(out.powers[k], 1e-300);
            max_change = std::max(max_change, rel);
            out.powers[k] = next;
        }
        out.iterations = sweep;
        if (max_change < options.tolerance) {
            out.converged = true;
            break;
        }
    }

    out.sinrs = compute_sinrs(gains, out.powers, params.noise_power);
    out.utilities.resize(K);
    for (int k = 0; k < K; ++k) out.utilities[k] = utility(out.powers[k], out.sinrs[k], params);
    for (int k = 0; k < K; ++k)
        if (out.powers[k] >= params.max_power * (1.0 - 1e-12)) out.saturated.push_back(k);
    return out;
}

}  // namespace uwbpc
