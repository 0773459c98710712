#include "asymptotics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"

namespace uwbpc {

namespace {

constexpr double kDbPerNat = 4.342944819032518;  // 10*log10(e)

void check_lambda_rho(double lambda, double rho) {
    if (!(lambda > 1.0)) throw DomainError("pdp_ratio must be > 1 (linear)");
    if (!(rho > 0.0) || rho > 1.0) throw DomainError("finger_fraction must be in (0, 1]");
}

// lambda^t and lambda^t - 1 in exp/log form; expm1 keeps the small-exponent
// differences accurate (needed for the beta -> 0 limit checks).
double xp(double lambda, double t) { return std::exp(t * std::log(lambda)); }
double xpm1(double lambda, double t) { return std::expm1(t * std::log(lambda)); }

}  // namespace

double mu(double pdp_ratio, double finger_fraction) {
    check_lambda_rho(pdp_ratio, finger_fraction);
    const double x = pdp_ratio, r = finger_fraction;
    return (x - 1.0) * xp(x, r - 1.0) / xpm1(x, r);
}

double nu0(double pdp_ratio, double finger_fraction) {
    check_lambda_rho(pdp_ratio, finger_fraction);
    const double x = pdp_ratio, r = finger_fraction;
    return (x + xp(x, r) - 2.0 * xp(x, 1.0 + r)) / (x - xp(x, 1.0 + r));
}

namespace detail {

NuBranch select_nu_branch(double r, double b) {
    // Half-open dispatch; ties go to the lower-beta branch (the boundary
    // values agree, see the continuity tests).
    if (b <= std::min(r, 1.0 - r)) return NuBranch::a;
    if (r <= 0.5 && b <= 1.0 - r) return NuBranch::b;
    if (r >= 0.5 && b <= r) return NuBranch::c;
    if (b <= 1.0) return NuBranch::d;
    return NuBranch::e;
}

double nu_branch(NuBranch branch, double x, double r, double b) {
    check_lambda_rho(x, r);
    if (!(b > 0.0)) throw DomainError("load_factor must be > 0");
    const double lg = std::log(x);
    const double xr = xp(x, r);
    const double xrm1 = xpm1(x, r);
    double num, den;
    switch (branch) {
        case NuBranch::a:
            num = x * xpm1(x, b) * (4.0 * xp(x, 2.0 * r) + 3.0 * xp(x, b) - 1.0) -
                  2.0 * xp(x, r + b) * (xr + 3.0 * x - 1.0) * b * lg;
            den = 2.0 * xrm1 * xrm1 * b * xp(x, 1.0 + b) * lg;
            break;
        case NuBranch::b:
            num = x * (4.0 * xp(x, b) - 1.0) * xpm1(x, 2.0 * r) -
                  2.0 * xp(x, r + b) * (3.0 * x * r - b + xr * b) * lg;
            den = 2.0 * xrm1 * xrm1 * b * xp(x, 1.0 + b) * lg;
            break;
        case NuBranch::c:
            num = -4.0 * xp(x, 2.0 + 2.0 * r) - 4.0 * xp(x, 2.0 + b) +
                  xp(x, 2.0 * (r + b)) + 4.0 * xp(x, 2.0 + 2.0 * r + b) +
                  3.0 * xp(x, 2.0 + 2.0 * b) -
                  2.0 * xp(x, 1.0 + r + b) * (r + 3.0 * x * b + xr * b - 1.0) * lg;
            den = 2.0 * xrm1 * xrm1 * b * xp(x, 2.0 + b) * lg;
            break;
        case NuBranch::d:
            num = -xp(x, 2.0 + 2.0 * r) - 4.0 * xp(x, 2.0 + b) +
                  xp(x, 2.0 * (r + b)) + 4.0 * xp(x, 2.0 + 2.0 * r + b) -
                  2.0 * xp(x, 1.0 + r + b) * (r + 3.0 * x * r + xr * b - 1.0) * lg;
            den = 2.0 * xrm1 * xrm1 * b * xp(x, 2.0 + b) * lg;
            break;
        case NuBranch::e:
            num = 2.0 * x * xpm1(x, 2.0 * r) - (xr + r + 3.0 * x * r - 1.0) * xr * lg;
            den = xrm1 * xrm1 * b * x * lg;
            break;
        default:
            throw DomainError("unknown nu branch");
    }
    return num / den;
}

}  // namespace detail

double nu(double pdp_ratio, double finger_fraction, double load_factor) {
    check_lambda_rho(pdp_ratio, finger_fraction);
    if (!(load_factor > 0.0)) throw DomainError("load_factor must be > 0");
    const auto branch = detail::select_nu_branch(finger_fraction, load_factor);
    return detail::nu_branch(branch, pdp_ratio, finger_fraction, load_factor);
}

namespace {

struct CellCore {
    double mu_v, nu_v, nu0_v, gamma, bracket_uwb, bracket_cdma;
};

// Shared evaluation: gamma = Gamma(N/nu) is reused by both modes and by the
// loss, per the first-order analysis.
CellCore cell_core(const AsymptoticInputs& in) {
    in.game.validate();
    if (in.processing_gain < 1) throw DomainError("processing_gain must be >= 1");
    if (in.num_users < 1) throw DomainError("num_users must be >= 1");
    if (in.load_factor < 0.0) throw DomainError("load_factor must be >= 0");

    CellCore c{};
    c.mu_v = mu(in.pdp_ratio, in.finger_fraction);
    c.nu0_v = nu0(in.pdp_ratio, in.finger_fraction);
    c.nu_v = in.load_factor == 0.0
                 ? c.nu0_v
                 : nu(in.pdp_ratio, in.finger_fraction, in.load_factor);
    const double N = (double)in.processing_gain;
    c.gamma = gamma_star(N / c.nu_v, in.game.total_bits);
    const double mai = (double)(in.num_users - 1) * c.mu_v;
    c.bracket_uwb = 1.0 - c.gamma * (mai + c.nu_v) / N;
    // CDMA evaluated with its own target SINR Gamma(N/nu0).
    const double gamma_cdma = gamma_star(N / c.nu0_v, in.game.total_bits);
    c.bracket_cdma = 1.0 - gamma_cdma * (mai + c.nu0_v) / N;
    return c;
}

double utility_from(double gamma, double bracket, const GameParams& game) {
    const double psr = efficiency(gamma, game.total_bits);
    return (double)game.info_bits / game.total_bits * game.rate * psr /
           (game.noise_power * gamma) * bracket;
}

}  // namespace

double asymptotic_utility(const AsymptoticInputs& in, AccessMode mode) {
    const CellCore c = cell_core(in);
    const double N = (double)in.processing_gain;
    if (mode == AccessMode::uwb) {
        if (!(c.bracket_uwb > 0.0))
            throw InfeasibleError("infeasible: Gamma(N/nu)*((K-1)mu+nu) >= N (N=" +
                                  std::to_string(in.processing_gain) + ")");
        return utility_from(c.gamma, c.bracket_uwb, in.game);
    }
    const double gamma_cdma = gamma_star(N / c.nu0_v, in.game.total_bits);
    if (!(c.bracket_cdma > 0.0))
        throw InfeasibleError("infeasible: Gamma(N/nu0)*((K-1)mu+nu0) >= N (N=" +
                              std::to_string(in.processing_gain) + ")");
    return utility_from(gamma_cdma, c.bracket_cdma, in.game);
}

LossResult loss(const AsymptoticInputs& in) {
    const CellCore c = cell_core(in);
    const double N = (double)in.processing_gain;
    const double denom = N - c.gamma * ((double)(in.num_users - 1) * c.mu_v + c.nu_v);
    if (!(denom > 0.0))
        throw InfeasibleError("infeasible: loss denominator non-positive (N=" +
                              std::to_string(in.processing_gain) + ")");
    LossResult r;
    r.epsilon = c.gamma * (c.nu0_v - c.nu_v) / denom;
    r.loss_db = kDbPerNat * r.epsilon;
    return r;
}

AsymptoticReport analyze_cell(const AsymptoticInputs& in) {
    const CellCore c = cell_core(in);
    AsymptoticReport rep;
    rep.mu = c.mu_v;
    rep.nu = c.nu_v;
    rep.nu0 = c.nu0_v;
    rep.gamma_target = c.gamma;
    rep.high_load = (double)in.num_users / in.processing_gain > 0.1;
    rep.feasible = c.bracket_uwb > 0.0 && c.bracket_cdma > 0.0;
    if (rep.feasible) {
        rep.utility_uwb = utility_from(c.gamma, c.bracket_uwb, in.game);
        const double gamma_cdma =
            gamma_star((double)in.processing_gain / c.nu0_v, in.game.total_bits);
        rep.utility_cdma = utility_from(gamma_cdma, c.bracket_cdma, in.game);
        const LossResult l = loss(in);
        rep.epsilon = l.epsilon;
        rep.loss_db = l.loss_db;
    } else {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        rep.utility_uwb = rep.utility_cdma = rep.epsilon = rep.loss_db = nan;
    }
    return rep;
}

}  // namespace uwbpc
