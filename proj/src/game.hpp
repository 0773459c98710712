#pragma once

#include <vector>

#include "rake.hpp"

namespace uwbpc {

// Per-packet / radio parameters of the power control game.
struct GameParams {
    int total_bits = 100;          // M, bits per packet
    int info_bits = 100;           // D <= M
    double rate = 1.0e5;           // R, bits/s
    double noise_power = 5.0e-16;  // W
    double max_power = 1.0e-6;     // W; the minimum power is fixed at 0

    void validate() const;  // throws DomainError
};

// Packet success rate model f(sinr) = (1 - exp(-sinr/2))^M.
double efficiency(double sinr, int total_bits);
double efficiency_derivative(double sinr, int total_bits);

// Utility in bits per Joule: (D/M) * R * f(sinr) / power.
// Defined as 0 at power == 0 (the limit along sinr = 0), which keeps the
// strategy set closed at the lower bound.
double utility(double power, double sinr, const GameParams& params);

// Target SINR: the unique root gamma* in (0, zeta) of
//   f'(gamma) * gamma * (1 - gamma/zeta) = f(gamma).
// zeta may be +inf. Bisection on the monotone form
//   q(gamma) = (M/2) * gamma / (e^{gamma/2} - 1) * (1 - gamma/zeta) - 1,
// which shares the root and never underflows. Throws SolverError when no
// bracket exists (total_bits < 2 makes the efficiency non-S-shaped).
double gamma_star(double zeta, int total_bits);

// Output SINRs of all users for a given power vector.
std::vector<double> compute_sinrs(const GainSet& gains, const std::vector<double>& powers,
                                  double noise_power);

// Capped best response of one user given the others' powers.
double best_response(int user, const std::vector<double>& powers, const GainSet& gains,
                     double gamma_target, const GameParams& params);

struct SolveOptions {
    double tolerance = 1e-8;       // max relative power change per sweep
    int max_sweeps = 10000;
    double initial_power = 1e-12;  // W, strictly inside the strategy set
};

struct NashOutcome {
    std::vector<double> powers;
    std::vector<double> sinrs;
    std::vector<double> utilities;
    std::vector<double> gamma_targets;  // Gamma(zeta_k) used by the iteration
    int iterations = 0;
    bool converged = false;
    std::vector<int> saturated;  // users at max_power
};

// Sequential best-response sweeps to the Nash equilibrium.
NashOutcome solve_equilibrium(const GainSet& gains, const GameParams& params,
                              const SolveOptions& options = {});

}  // namespace uwbpc
