#pragma once

#include "game.hpp"

namespace uwbpc {

enum class AccessMode { cdma, uwb };

// Inputs of the dense-multipath limit: the channel enters only through the
// profile ratio lambda, the Rake through the finger fraction rho, and the
// frame structure through beta = chips_per_frame / num_paths. beta == 0
// selects the DS-CDMA limit.
struct AsymptoticInputs {
    double pdp_ratio = 100.0;     // lambda, linear, > 1
    double finger_fraction = 1.0; // rho in (0, 1]
    double load_factor = 0.25;    // beta >= 0
    int processing_gain = 250;    // N
    int num_users = 10;           // K
    GameParams game;
};

// Asymptotic multiple-access interference coefficient
//   mu(lambda, rho) = (lambda - 1) * lambda^(rho-1) / (lambda^rho - 1),
// the ratio of total to captured profile energy.
double mu(double pdp_ratio, double finger_fraction);

// Asymptotic self-interference coefficient; five-branch piecewise closed form
// selected by where beta sits relative to rho, 1-rho and 1. Continuous across
// the branch boundaries and strictly decreasing in beta.
double nu(double pdp_ratio, double finger_fraction, double load_factor);

// beta -> 0 limit of nu: the DS-CDMA self-interference coefficient.
double nu0(double pdp_ratio, double finger_fraction);

namespace detail {

enum class NuBranch { a, b, c, d, e };

NuBranch select_nu_branch(double finger_fraction, double load_factor);

// Evaluates one branch formula without the domain dispatch; used by the
// continuity tests to compare adjacent branches at their shared boundary.
double nu_branch(NuBranch branch, double pdp_ratio, double finger_fraction,
                 double load_factor);

}  // namespace detail

// Normalized equilibrium utility u*/h_sp in the dense-multipath limit:
//   (D/M) * R * f(g) / (noise * g) * (1 - g * ((K-1)*mu + v) / N),
// with g = Gamma(N/v) and v = nu (UWB) or nu0 (CDMA).
// Throws InfeasibleError when the bracket is non-positive.
double asymptotic_utility(const AsymptoticInputs& in, AccessMode mode);

struct LossResult {
    double epsilon;  // linear loss of CDMA w.r.t. UWB at equal N
    double loss_db;  // 10*log10(e) * epsilon
};

// First-order loss of DS-CDMA relative to the IR-UWB system with the same
// processing gain:
//   epsilon = Gamma(N/nu) * (nu0 - nu) / (N - Gamma(N/nu) * ((K-1)*mu + nu)).
LossResult loss(const AsymptoticInputs& in);

// One analysis row: every closed-form quantity for a parameter point, with
// infeasibility recorded instead of thrown.
struct AsymptoticReport {
    double mu = 0.0;
    double nu = 0.0;
    double nu0 = 0.0;
    double gamma_target = 0.0;      // Gamma(N/nu)
    double utility_uwb = 0.0;       // normalized, per unit h_sp
    double utility_cdma = 0.0;
    double epsilon = 0.0;
    double loss_db = 0.0;
    bool feasible = false;
    bool high_load = false;         // K/N > 0.1; the limit is suspect
};

AsymptoticReport analyze_cell(const AsymptoticInputs& in);

}  // namespace uwbpc
