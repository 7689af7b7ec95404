// SPDX-License-Identifier: Apache-2.0
#include "beamsnr/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "beamsnr/rng.hpp"

namespace beamsnr {

namespace {

// Sub-stream tags for make_snapshot's internal draws.
constexpr std::uint64_t kChannelStream = 1;
constexpr std::uint64_t kNoiseStream = 2;

void validate_geometry(const ArrayGeometry& g) {
    if (g.num_antennas < 1)
        throw std::invalid_argument("geometry: antenna count must be >= 1");
    if (!(g.spacing_wavelengths > 0.0))
        throw std::invalid_argument("geometry: spacing must be > 0");
}

} // namespace

CVec steering_vector(const ArrayGeometry& geometry, double phi) {
    validate_geometry(geometry);
    if (!(phi >= -1.0 && phi <= 1.0))
        throw std::invalid_argument("steering_vector: phi must be in [-1, 1]");
    CVec a(geometry.num_antennas);
    const double phase_step = 2.0 * std::numbers::pi * geometry.spacing_wavelengths * phi;
    for (std::size_t m = 0; m < a.size(); ++m)
        a[m] = std::polar(1.0, phase_step * static_cast<double>(m));
    return a;
}

ChannelRealization make_channel(const ArrayGeometry& geometry, std::vector<PathComponent> paths) {
    validate_geometry(geometry);
    if (paths.empty()) throw std::invalid_argument("make_channel: need at least one path");
    ChannelRealization ch;
    ch.h.assign(geometry.num_antennas, 0.0);
    for (const auto& p : paths) {
        const CVec a = steering_vector(geometry, p.spatial_freq);
        for (std::size_t m = 0; m < ch.h.size(); ++m) ch.h[m] += p.gain * a[m];
    }
    ch.paths = std::move(paths);
    return ch;
}

ChannelRealization draw_channel(const ArrayGeometry& geometry, std::size_t num_paths,
                                std::uint64_t seed) {
    validate_geometry(geometry);
    if (num_paths < 1) throw std::invalid_argument("draw_channel: path count must be >= 1");
    Rng rng(seed);
    std::vector<PathComponent> paths(num_paths);
    for (auto& p : paths) {
        p.gain = rng.complex_gaussian(1.0);
        p.spatial_freq = rng.uniform(-1.0, 1.0);
    }
    return make_channel(geometry, std::move(paths));
}

Snapshot snapshot_from_channel(const ChannelRealization& channel, double rho_target, double n0,
                               std::uint64_t noise_seed) {
    if (!(rho_target >= 0.0))
        throw std::invalid_argument("snapshot: rho_target must be >= 0");
    if (!(n0 > 0.0)) throw std::invalid_argument("snapshot: N0 must be > 0");
    const std::size_t m = channel.h.size();

    Snapshot snap;
    snap.n0_true = n0;
    snap.rho_true = rho_target;
    snap.seed = noise_seed;
    snap.x.assign(m, 0.0);
    if (rho_target > 0.0) {
        const double h_norm = std::sqrt(norm_sq(channel.h));
        if (h_norm == 0.0)
            throw std::runtime_error("snapshot: channel is identically zero, cannot calibrate");
        // ||x||^2 = M * rho * N0 exactly (unit-modulus transmit symbol absorbed into x)
        const double scale = std::sqrt(static_cast<double>(m) * rho_target * n0) / h_norm;
        for (std::size_t i = 0; i < m; ++i) snap.x[i] = channel.h[i] * scale;
    }
    snap.y.resize(m);
    Rng rng(noise_seed);
    for (std::size_t i = 0; i < m; ++i) snap.y[i] = snap.x[i] + rng.complex_gaussian(n0);
    return snap;
}

Snapshot make_snapshot(const ArrayGeometry& geometry, std::size_t num_paths, double rho_target,
                       double n0, std::uint64_t seed) {
    const ChannelRealization ch =
        draw_channel(geometry, num_paths, mix_seed(seed, kChannelStream));
    Snapshot snap = snapshot_from_channel(ch, rho_target, n0, mix_seed(seed, kNoiseStream));
    snap.seed = seed;
    return snap;
}

} // namespace beamsnr
