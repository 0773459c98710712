#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace uwbpc::testing {

namespace {

using big = boost::multiprecision::cpp_bin_float_50;

big bpow(const big& x, const big& t) { return exp(t * log(x)); }

}  // namespace

DenseGains dense_gains(const ChannelSet& channels, double finger_fraction,
                       int chips_per_frame, int processing_gain) {
    using cd = std::complex<double>;
    const int K = channels.num_users();
    const int L = channels.num_paths();
    const int fingers = std::max(1, (int)std::ceil(finger_fraction * L));
    const double N = (double)processing_gain;

    // Masked combining weights.
    std::vector<std::vector<cd>> w(K);
    for (int k = 0; k < K; ++k) {
        w[k].assign(L, cd{0.0, 0.0});
        for (int l = 0; l < fingers && l < L; ++l) w[k][l] = channels.gains[k][l];
    }

    // L x (L-1) upper-band matrix: entry (i, j), 1-based, is vec[L+i-j]
    // when i <= j <= L-1 and zero elsewhere.
    const auto band = [&](const std::vector<cd>& vec) {
        std::vector<std::vector<cd>> m(L, std::vector<cd>(std::max(L - 1, 0), cd{0, 0}));
        for (int i = 1; i <= L; ++i)
            for (int j = 1; j <= L - 1; ++j)
                if (i <= j) m[i - 1][j - 1] = vec[L + i - j - 1];
        return m;
    };
    const auto hermitian_apply = [&](const std::vector<std::vector<cd>>& m,
                                     const std::vector<cd>& v) {
        std::vector<cd> out(std::max(L - 1, 0), cd{0, 0});
        for (int j = 0; j < L - 1; ++j)
            for (int i = 0; i < L; ++i) out[j] += std::conj(m[i][j]) * v[i];
        return out;
    };
    const auto inner = [&](const std::vector<cd>& a, const std::vector<cd>& b) {
        cd sum{0, 0};
        for (int i = 0; i < L; ++i) sum += std::conj(a[i]) * b[i];
        return sum;
    };
    const auto phi = phi_coefficients(L, chips_per_frame);

    DenseGains g;
    g.h_sp.resize(K);
    g.h_si.assign(K, 0.0);
    g.h_mai.assign(K, std::vector<double>(K, 0.0));
    for (int k = 0; k < K; ++k) {
        const auto& alpha = channels.gains[k];
        g.h_sp[k] = std::abs(inner(w[k], alpha));
        if (L > 1) {
            const auto Bk = band(w[k]);
            const auto Ak = band(alpha);
            const auto v1 = hermitian_apply(Bk, alpha);
            const auto v2 = hermitian_apply(Ak, w[k]);
            double num = 0.0;
            for (int j = 0; j < L - 1; ++j) num += std::norm(phi[j] * (v1[j] + v2[j]));
            g.h_si[k] = num / (N * g.h_sp[k]);
        }
        for (int j = 0; j < K; ++j) {
            if (j == k) continue;
            const auto& alpha_j = channels.gains[j];
            double num = std::norm(inner(w[k], alpha_j));
            if (L > 1) {
                const auto Bk = band(w[k]);
                const auto Aj = band(alpha_j);
                const auto v1 = hermitian_apply(Bk, alpha_j);
                const auto v2 = hermitian_apply(Aj, w[k]);
                for (int t = 0; t < L - 1; ++t) num += std::norm(v1[t]) + std::norm(v2[t]);
            }
            g.h_mai[k][j] = num / (N * g.h_sp[k]);
        }
    }
    return g;
}

double mu_oracle(double lambda, double rho) {
    const big x = lambda, r = rho;
    return ((x - 1) * bpow(x, r - 1) / (bpow(x, r) - 1)).convert_to<double>();
}

double nu0_oracle(double lambda, double rho) {
    const big x = lambda, r = rho;
    return ((x + bpow(x, r) - 2 * bpow(x, 1 + r)) / (x - bpow(x, 1 + r)))
        .convert_to<double>();
}

double nu_oracle(double lambda, double rho, double beta) {
    const big x = lambda, r = rho, b = beta;
    const big lg = log(x);
    const big xr = bpow(x, r);
    big num, den;
    if (beta <= std::min(rho, 1.0 - rho)) {
        num = x * (bpow(x, b) - 1) * (4 * bpow(x, 2 * r) + 3 * bpow(x, b) - 1) -
              2 * bpow(x, r + b) * (xr + 3 * x - 1) * b * lg;
        den = 2 * (xr - 1) * (xr - 1) * b * bpow(x, 1 + b) * lg;
    } else if (rho <= 0.5 && beta <= 1.0 - rho) {
        num = x * (4 * bpow(x, b) - 1) * (bpow(x, 2 * r) - 1) -
              2 * bpow(x, r + b) * (3 * x * r - b + xr * b) * lg;
        den = 2 * (xr - 1) * (xr - 1) * b * bpow(x, 1 + b) * lg;
    } else if (rho >= 0.5 && beta <= rho) {
        num = -4 * bpow(x, 2 + 2 * r) - 4 * bpow(x, 2 + b) + bpow(x, 2 * (r + b)) +
              4 * bpow(x, 2 + 2 * r + b) + 3 * bpow(x, 2 + 2 * b) -
              2 * bpow(x, 1 + r + b) * (r + 3 * x * b + xr * b - 1) * lg;
        den = 2 * (xr - 1) * (xr - 1) * b * bpow(x, 2 + b) * lg;
    } else if (beta <= 1.0) {
        num = -bpow(x, 2 + 2 * r) - 4 * bpow(x, 2 + b) + bpow(x, 2 * (r + b)) +
              4 * bpow(x, 2 + 2 * r + b) -
              2 * bpow(x, 1 + r + b) * (r + 3 * x * r + xr * b - 1) * lg;
        den = 2 * (xr - 1) * (xr - 1) * b * bpow(x, 2 + b) * lg;
    } else {
        num = 2 * x * (bpow(x, 2 * r) - 1) - (xr + r + 3 * x * r - 1) * xr * lg;
        den = (xr - 1) * (xr - 1) * b * x * lg;
    }
    return (num / den).convert_to<double>();
}

double gamma_star_oracle(double zeta, int total_bits) {
    const int M = total_bits;
    const auto f = [&](double g) { return std::pow(-std::expm1(-g / 2.0), M); };
    const auto fp = [&](double g) {
        return 0.5 * M * std::exp(-g / 2.0) * std::pow(-std::expm1(-g / 2.0), M - 1);
    };
    const auto residual = [&](double g) { return fp(g) * g * (1.0 - g / zeta) - f(g); };
    // Bracket the sign change; below the root the left side dominates.
    double lo = 1.0, hi = std::isinf(zeta) ? 60.0 : std::min(zeta * (1 - 1e-9), 60.0);
    while (residual(lo) <= 0.0) lo *= 0.5;
    if (residual(hi) >= 0.0) throw std::runtime_error("oracle bracket failure");
    for (int i = 0; i < 500; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (residual(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace uwbpc::testing
