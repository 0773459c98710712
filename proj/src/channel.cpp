#include "channel.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"
#include "rng.hpp"

namespace uwbpc {

void ChannelConfig::validate() const {
    if (num_users < 1) throw DomainError("num_users must be >= 1");
    if (num_paths < 1) throw DomainError("num_paths must be >= 1");
    if (!(pdp_ratio > 1.0)) throw DomainError("pdp_ratio must be > 1 (linear)");
    if (!(distance_min > 0.0) || !(distance_max >= distance_min))
        throw DomainError("require 0 < distance_min <= distance_max");
    if (!(path_gain_scale > 0.0)) throw DomainError("path_gain_scale must be > 0");
}

double apdp_variance(int path, int num_paths, double pdp_ratio, double sigma2) {
    if (path < 1 || path > num_paths)
        throw DomainError("path index " + std::to_string(path) + " out of 1.." +
                          std::to_string(num_paths));
    if (!(pdp_ratio > 1.0)) throw DomainError("pdp_ratio must be > 1");
    if (!(sigma2 > 0.0)) throw DomainError("sigma2 must be > 0");
    if (num_paths == 1) return sigma2;
    const double exponent = -(double)(path - 1) / (double)(num_paths - 1);
    return sigma2 * std::exp(exponent * std::log(pdp_ratio));
}

ChannelSet draw_channels(const ChannelConfig& cfg, std::uint64_t realization,
                         std::uint32_t attempt) {
    cfg.validate();
    const int K = cfg.num_users;
    const int L = cfg.num_paths;

    ChannelSet set;
    set.gains.resize(K);
    set.distances.resize(K);
    set.variances.resize(K);

    for (int k = 0; k < K; ++k) {
        auto rng = substream(cfg.seed, {realization, attempt, (std::uint64_t)k});
        const double d = rng.uniform(cfg.distance_min, cfg.distance_max);
        const double sigma2 = cfg.path_gain_scale / (d * d);
        set.distances[k] = d;
        set.variances[k].resize(L);
        set.gains[k].resize(L);
        for (int l = 0; l < L; ++l) {
            const double var = apdp_variance(l + 1, L, cfg.pdp_ratio, sigma2);
            const double scale = std::sqrt(var / 2.0);
            auto [re, im] = rng.normal_pair();
            set.variances[k][l] = var;
            set.gains[k][l] = {scale * re, scale * im};
        }
    }
    return set;
}

}  // namespace uwbpc
