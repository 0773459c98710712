#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace uwbpc {

// Multipath channel generator: K users, L taps per user, Rayleigh-faded gains
// with an exponentially decaying average power delay profile. The ratio
// between the first and the last tap variance is pdp_ratio (linear scale).
struct ChannelConfig {
    int num_users = 10;
    int num_paths = 200;
    double pdp_ratio = 100.0;     // linear; > 1
    double distance_min = 3.0;    // m
    double distance_max = 30.0;   // m
    double path_gain_scale = 0.3; // sigma2_k = path_gain_scale * d_k^-2
    std::uint64_t seed = 0;

    void validate() const;  // throws DomainError
};

struct ChannelSet {
    // gains[k][l]: complex tap amplitude of user k, tap l (0-based).
    std::vector<std::vector<std::complex<double>>> gains;
    std::vector<double> distances;                 // m
    std::vector<std::vector<double>> variances;    // per-tap variance profile

    int num_users() const { return (int)gains.size(); }
    int num_paths() const { return gains.empty() ? 0 : (int)gains[0].size(); }
};

// Per-tap variance of the exponential profile:
//   sigma2 * pdp_ratio^(-(path-1)/(num_paths-1)),    path in 1..num_paths,
// with the exponent defined as 0 when num_paths == 1.
double apdp_variance(int path, int num_paths, double pdp_ratio, double sigma2);

// Draws one channel realization. Deterministic in (cfg.seed, realization,
// attempt); each user gets an independent substream, so the result does not
// depend on evaluation order. Real and imaginary parts are zero-mean normal
// with variance sigma2_{k,l}/2 each.
ChannelSet draw_channels(const ChannelConfig& cfg, std::uint64_t realization = 0,
                         std::uint32_t attempt = 0);

}  // namespace uwbpc
