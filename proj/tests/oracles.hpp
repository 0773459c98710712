#pragma once

// Independent oracles used only by the test suite. These deliberately avoid
// the library's optimized code paths:
//  - dense_gains builds the full L x (L-1) interference matrices and the
//    diagonal chip-overlap matrix literally and multiplies them out;
//  - nu_oracle / mu_oracle / nu0_oracle re-transcribe the closed forms with
//    50-digit floating point;
//  - gamma_star_oracle bisects the raw optimality condition
//    f'(g) g (1 - g/zeta) = f(g) instead of the library's monotone form.

#include <complex>
#include <vector>

#include "channel.hpp"
#include "rake.hpp"

namespace uwbpc::testing {

struct DenseGains {
    std::vector<double> h_sp;
    std::vector<double> h_si;
    std::vector<std::vector<double>> h_mai;
};

DenseGains dense_gains(const ChannelSet& channels, double finger_fraction,
                       int chips_per_frame, int processing_gain);

double mu_oracle(double lambda, double rho);
double nu0_oracle(double lambda, double rho);
double nu_oracle(double lambda, double rho, double beta);

double gamma_star_oracle(double zeta, int total_bits);

}  // namespace uwbpc::testing
