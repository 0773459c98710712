#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <utility>

namespace uwbpc {

// SplitMix64 finalizer; used both as a stand-alone mixer for substream
// derivation and to expand a 64-bit seed into xoshiro state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256++ (Blackman / Vigna). Small, fast, and fully specified, so
// ensembles reproduce bit-exactly on any platform.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        for (auto& word : state_) word = splitmix64(seed);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in (0, 1]; never returns 0 so it is safe under log().
    double uniform_pos() { return (double)((next() >> 11) + 1) * 0x1.0p-53; }

    // Uniform in [0, 1).
    double uniform() { return (double)(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // One Box-Muller transform: a pair of independent standard normals.
    std::pair<double, double> normal_pair() {
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double theta = 2.0 * 3.14159265358979323846 * uniform();
        return {r * std::cos(theta), r * std::sin(theta)};
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::array<std::uint64_t, 4> state_;
};

// Derives an independent stream from (seed, id0, id1, ...). The derivation is
// order-insensitive at the call site: the same ids always yield the same
// stream, so parallel runners match serial ones bit for bit.
inline Xoshiro256pp substream(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) {
    std::uint64_t h = seed;
    std::uint64_t s = h;
    h = splitmix64(s);
    for (std::uint64_t id : ids) {
        s = h + 0x9E3779B97F4A7C15ULL * (id + 1);
        h = splitmix64(s);
    }
    return Xoshiro256pp(h);
}

}  // namespace uwbpc
