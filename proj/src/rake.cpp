#include "rake.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace uwbpc {

void RakeConfig::validate() const {
    if (!(finger_fraction > 0.0) || finger_fraction > 1.0)
        throw DomainError("finger_fraction must be in (0, 1]");
    if (chips_per_frame < 1) throw DomainError("chips_per_frame must be >= 1");
    if (processing_gain < chips_per_frame)
        throw DomainError("processing_gain must be >= chips_per_frame");
}

namespace {

int finger_count(int num_paths, double rho) {
    if (!(rho > 0.0) || rho > 1.0) throw DomainError("finger_fraction must be in (0, 1]");
    const int fingers = (int)std::ceil(rho * num_paths);
    return std::clamp(fingers, 1, num_paths);
}

}  // namespace

std::vector<std::complex<double>> prake_weights(
    std::span<const std::complex<double>> alpha, double rho) {
    const int L = (int)alpha.size();
    const int Lp = finger_count(L, rho);
    std::vector<std::complex<double>> weights(L, {0.0, 0.0});
    std::copy(alpha.begin(), alpha.begin() + Lp, weights.begin());
    return weights;
}

std::vector<double> phi_coefficients(int num_paths, int chips_per_frame) {
    if (num_paths < 1) throw DomainError("num_paths must be >= 1");
    if (chips_per_frame < 1) throw DomainError("chips_per_frame must be >= 1");
    std::vector<double> phi;
    phi.reserve(num_paths > 0 ? num_paths - 1 : 0);
    for (int l = 1; l <= num_paths - 1; ++l) {
        const int overlap = std::min(num_paths - l, chips_per_frame);
        phi.push_back(std::sqrt((double)overlap / (double)chips_per_frame));
    }
    return phi;
}

GainBasis compute_gain_basis(const ChannelSet& channels, double finger_fraction) {
    const int K = channels.num_users();
    const int L = channels.num_paths();
    const int Lp = finger_count(L, finger_fraction);

    GainBasis basis;
    basis.num_paths = L;
    basis.h_sp.resize(K);
    basis.si_lag_power.assign(K, std::vector<double>(L > 1 ? L - 1 : 0, 0.0));
    basis.mai_raw.assign(K, std::vector<double>(K, 0.0));

    for (int k = 0; k < K; ++k) {
        const auto& a = channels.gains[k];
        double sp = 0.0;
        for (int l = 0; l < Lp; ++l) sp += std::norm(a[l]);
        basis.h_sp[k] = sp;
        if (sp == 0.0)
            throw DegenerateChannelError("zero captured energy for user " + std::to_string(k));

        // Self-interference: combined forward+backward correlation at lag d,
        //   c_d = sum_{l>d} (conj(w_l) a_{l-d} + conj(a_l) w_{l-d}),
        // where w is the finger-masked copy of a. With MRC this reduces to
        // (mask_l + mask_{l-d}) * conj(a_l) * a_{l-d}.
        for (int d = 1; d <= L - 1; ++d) {
            std::complex<double> c{0.0, 0.0};
            for (int l = d; l < L; ++l) {
                const double coeff = (l < Lp ? 1.0 : 0.0) + (l - d < Lp ? 1.0 : 0.0);
                if (coeff != 0.0) c += coeff * std::conj(a[l]) * a[l - d];
            }
            basis.si_lag_power[k][d - 1] = std::norm(c);
        }
    }

    // Cross-user sums: for the (k, j) pair the receiver mask of user k meets
    // the channel of user j both causally and anti-causally, plus the aligned
    // (lag 0) term. None of these carry chip-overlap weights.
    for (int k = 0; k < K; ++k) {
        const auto& ak = channels.gains[k];
        for (int j = 0; j < K; ++j) {
            if (j == k) continue;
            const auto& aj = channels.gains[j];
            double total = 0.0;
            std::complex<double> lag0{0.0, 0.0};
            for (int l = 0; l < Lp; ++l) lag0 += std::conj(ak[l]) * aj[l];
            total += std::norm(lag0);
            for (int d = 1; d <= L - 1; ++d) {
                std::complex<double> fwd{0.0, 0.0};  // masked receiver, lagged channel
                std::complex<double> bwd{0.0, 0.0};  // channel, lagged masked receiver
                for (int l = d; l < L; ++l) {
                    if (l < Lp) fwd += std::conj(ak[l]) * aj[l - d];
                    if (l - d < Lp) bwd += std::conj(aj[l]) * ak[l - d];
                }
                total += std::norm(fwd) + std::norm(bwd);
            }
            basis.mai_raw[k][j] = total;
        }
    }
    return basis;
}

GainSet finalize_gains(const GainBasis& basis, const RakeConfig& rake) {
    rake.validate();
    const int K = (int)basis.h_sp.size();
    const int L = basis.num_paths;
    const double N = (double)rake.processing_gain;
    const int Nc = rake.chips_per_frame;

    GainSet gains;
    gains.h_sp = basis.h_sp;
    gains.h_si.resize(K);
    gains.zeta.resize(K);
    gains.h_mai.assign(K, std::vector<double>(K, 0.0));

    for (int k = 0; k < K; ++k) {
        double si = 0.0;
        for (int d = 1; d <= L - 1; ++d) {
            const double w = (double)std::min(d, Nc) / (double)Nc;
            si += w * basis.si_lag_power[k][d - 1];
        }
        gains.h_si[k] = si / (N * gains.h_sp[k]);
        gains.zeta[k] = gains.h_si[k] > 0.0
                            ? gains.h_sp[k] / gains.h_si[k]
                            : std::numeric_limits<double>::infinity();
        if (gains.zeta[k] < 1.0) ++gains.zeta_violations;
        for (int j = 0; j < K; ++j) {
            if (j == k) continue;
            gains.h_mai[k][j] = basis.mai_raw[k][j] / (N * gains.h_sp[k]);
        }
    }
    return gains;
}

GainSet compute_gains(const ChannelSet& channels, const RakeConfig& rake) {
    rake.validate();
    return finalize_gains(compute_gain_basis(channels, rake.finger_fraction), rake);
}

}  // namespace uwbpc
