// SPDX-License-Identifier: Apache-2.0
#ifndef BEAMSNR_RNG_HPP
#define BEAMSNR_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace beamsnr {

/// Seed-splitting rule (public contract, relied on for reproducibility):
/// every consumer of randomness derives its stream as
///     mix_seed(master_seed, a, b)
/// where (a, b) identify the consumer -- e.g. (grid_index, trial_index)
/// for Monte Carlo trials. Results are therefore independent of how
/// trials are scheduled across workers.
inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline std::uint64_t hash64(std::uint64_t z) {
    // splitmix64 finalizer
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t z = hash64(master + kGolden);
    z = hash64(z ^ (a + kGolden));
    z = hash64(z ^ (b + 2 * kGolden));
    return z;
}

/// Deterministic random stream. mt19937_64's output sequence is pinned by
/// the standard; the double conversions and the Gaussian transform below
/// are our own, so the generated values are identical on every platform
/// (std::normal_distribution would not be).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Circularly-symmetric complex Gaussian with E|z|^2 = variance
    /// (real and imaginary parts each N(0, variance/2)), via Box-Muller.
    std::complex<double> complex_gaussian(double variance) {
        // u1 in (0, 1] so the log is finite
        const double u1 = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
        const double u2 = uniform01();
        const double r = std::sqrt(-variance * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(theta), r * std::sin(theta)};
    }

private:
    std::mt19937_64 gen_;
};

} // namespace beamsnr

#endif // BEAMSNR_RNG_HPP
