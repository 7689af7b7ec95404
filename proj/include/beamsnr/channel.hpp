// SPDX-License-Identifier: Apache-2.0
#ifndef BEAMSNR_CHANNEL_HPP
#define BEAMSNR_CHANNEL_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "beamsnr/beamspace.hpp"

namespace beamsnr {

struct ArrayGeometry {
    std::size_t num_antennas = 64;
    double spacing_wavelengths = 0.5;
};

struct PathComponent {
    std::complex<double> gain;
    double spatial_freq; // in [-1, 1]
};

struct ChannelRealization {
    CVec h; // sum over paths of gain * steering_vector(spatial_freq)
    std::vector<PathComponent> paths;
};

/// One received vector y = x + n with its ground truth. The noiseless
/// signal is rescaled per realization so that ||x||^2 = M * rho * N0
/// holds exactly; rho_true is therefore exact for every snapshot, not
/// just in expectation.
struct Snapshot {
    CVec y;
    CVec x;
    double n0_true = 1.0;
    double rho_true = 0.0;
    std::uint64_t seed = 0;
};

/// Array response for spatial frequency phi in [-1, 1]: element m carries
/// phase 2*pi*spacing*m*phi, so every entry has unit magnitude and
/// ||a(phi)||^2 == M.
CVec steering_vector(const ArrayGeometry& geometry, double phi);

/// Assemble a channel from explicit path components (also the test hook
/// for pinning gains/angles).
ChannelRealization make_channel(const ArrayGeometry& geometry, std::vector<PathComponent> paths);

/// L paths with i.i.d. CN(0,1) gains and spatial frequencies uniform on
/// [-1, 1] (off-grid relative to the DFT beams). Deterministic in seed.
ChannelRealization draw_channel(const ArrayGeometry& geometry, std::size_t num_paths,
                                std::uint64_t seed);

/// Noisy snapshot from an existing channel: x = h scaled to the exact SNR
/// calibration, y = x + n with per-element complex noise variance n0.
Snapshot snapshot_from_channel(const ChannelRealization& channel, double rho_target, double n0,
                               std::uint64_t noise_seed);

/// Draw a channel and a noise vector from sub-streams of `seed` and
/// combine them into a calibrated snapshot.
Snapshot make_snapshot(const ArrayGeometry& geometry, std::size_t num_paths, double rho_target,
                       double n0, std::uint64_t seed);

} // namespace beamsnr

#endif // BEAMSNR_CHANNEL_HPP
