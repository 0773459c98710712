#pragma once

#include <complex>
#include <span>
#include <vector>

#include "channel.hpp"

namespace uwbpc {

// Rake receiver with maximal ratio combining. A partial Rake keeps the first
// ceil(finger_fraction * L) taps; finger_fraction = 1 is the all-Rake.
//
// processing_gain N and chips_per_frame N_c are the two quantities the SINR
// model actually consumes (N as the 1/N interference scale, N_c through the
// chip-overlap weights). frames_per_symbol is derived and may be fractional
// when a sweep pins N directly; chips_per_frame = 1 is the DS-CDMA case.
struct RakeConfig {
    double finger_fraction = 1.0;  // in (0, 1]
    int chips_per_frame = 1;       // N_c >= 1
    int processing_gain = 1;       // N >= N_c

    double frames_per_symbol() const {
        return (double)processing_gain / (double)chips_per_frame;
    }
    void validate() const;  // throws DomainError
};

// SINR model coefficients for one channel realization.
struct GainSet {
    std::vector<double> h_sp;               // signal part, > 0
    std::vector<double> h_si;               // self-interference, >= 0
    std::vector<std::vector<double>> h_mai; // K x K, diagonal unused (0)
    std::vector<double> zeta;               // h_sp/h_si, +inf when h_si == 0
    int zeta_violations = 0;                // count of zeta < 1 (diagnostic)

    int num_users() const { return (int)h_sp.size(); }
};

// MRC partial-Rake weights: the first ceil(rho*L) entries of alpha, zeros
// elsewhere. Throws DomainError for rho outside (0, 1].
std::vector<std::complex<double>> prake_weights(
    std::span<const std::complex<double>> alpha, double rho);

// Chip-overlap weights phi_l = sqrt(min(L-l, N_c)/N_c), l = 1..L-1.
// Empty for L == 1 (no inter-path interference with a single tap).
std::vector<double> phi_coefficients(int num_paths, int chips_per_frame);

// The (N, N_c)-independent part of the gain computation for a realization at
// a fixed finger fraction: captured energy, per-lag self-interference powers
// and the unweighted cross-user interference sums. Lets a sweep reuse one
// channel realization across many (N, N_c) cells.
struct GainBasis {
    std::vector<double> h_sp;                      // K
    std::vector<std::vector<double>> si_lag_power; // K x (L-1), |c_d|^2
    std::vector<std::vector<double>> mai_raw;      // K x K, diagonal 0
    int num_paths = 0;
};

GainBasis compute_gain_basis(const ChannelSet& channels, double finger_fraction);
GainSet finalize_gains(const GainBasis& basis, const RakeConfig& rake);

// compute_gain_basis + finalize_gains in one call.
GainSet compute_gains(const ChannelSet& channels, const RakeConfig& rake);

}  // namespace uwbpc
