// SPDX-License-Identifier: Apache-2.0
#include "beamsnr/beamspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace beamsnr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void bit_reverse_permute(CVec& v) {
    const std::size_t n = v.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
}

// In-place radix-2 DFT, sign = -1 forward / +1 inverse, no scaling.
void fft_pow2(CVec& v, int sign) {
    const std::size_t n = v.size();
    bit_reverse_permute(v);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * kTwoPi / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto w = std::polar(1.0, ang * static_cast<double>(k));
                const auto u = v[i + k];
                const auto t = w * v[i + k + len / 2];
                v[i + k] = u + t;
                v[i + k + len / 2] = u - t;
            }
        }
    }
}

CVec direct_dft(const CVec& v, int sign) {
    const std::size_t n = v.size();
    CVec out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            // reduce k*m mod n so the angle stays in [0, 2*pi)
            const double ang =
                sign * kTwoPi * static_cast<double>((k * m) % n) / static_cast<double>(n);
            acc += v[m] * std::polar(1.0, ang);
        }
        out[k] = acc;
    }
    return out;
}

CVec unitary_transform(const CVec& y, int sign) {
    if (y.empty()) throw std::invalid_argument("transform: input must have length >= 1");
    if (!all_finite(y)) throw std::invalid_argument("transform: input must be finite");
    CVec out = y;
    if (std::has_single_bit(y.size())) {
        fft_pow2(out, sign);
    } else {
        out = direct_dft(y, sign);
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(y.size()));
    for (auto& c : out) c *= scale;
    return out;
}

} // namespace

double norm_sq(const CVec& v) {
    double acc = 0.0;
    for (const auto& c : v) acc += std::norm(c);
    return acc;
}

bool all_finite(const CVec& v) {
    return std::all_of(v.begin(), v.end(), [](const std::complex<double>& c) {
        return std::isfinite(c.real()) && std::isfinite(c.imag());
    });
}

CVec to_beamspace(const CVec& y) { return unitary_transform(y, -1); }

CVec from_beamspace(const CVec& y_b) { return unitary_transform(y_b, +1); }

BeamspacePower sorted_power(const CVec& y_b) {
    const std::size_t m = y_b.size();
    BeamspacePower out;
    out.permutation.resize(m);
    std::iota(out.permutation.begin(), out.permutation.end(), std::size_t{0});
    std::vector<double> power(m);
    for (std::size_t i = 0; i < m; ++i) power[i] = std::norm(y_b[i]);
    std::sort(out.permutation.begin(), out.permutation.end(),
              [&power](std::size_t a, std::size_t b) {
                  if (power[a] != power[b]) return power[a] < power[b];
                  return a < b;
              });
    out.sorted_power.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.sorted_power[i] = power[out.permutation[i]];
    return out;
}

CVec naive_dft(const CVec& y) {
    if (y.empty()) throw std::invalid_argument("naive_dft: input must have length >= 1");
    CVec out = direct_dft(y, -1);
    const double scale = 1.0 / std::sqrt(static_cast<double>(y.size()));
    for (auto& c : out) c *= scale;
    return out;
}

CVec naive_idft(const CVec& y_b) {
    if (y_b.empty()) throw std::invalid_argument("naive_idft: input must have length >= 1");
    CVec out = direct_dft(y_b, +1);
    const double scale = 1.0 / std::sqrt(static_cast<double>(y_b.size()));
    for (auto& c : out) c *= scale;
    return out;
}

} // namespace beamsnr
