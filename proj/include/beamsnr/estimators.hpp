// SPDX-License-Identifier: Apache-2.0
#ifndef BEAMSNR_ESTIMATORS_HPP
#define BEAMSNR_ESTIMATORS_HPP

#include <cstddef>

#include "beamsnr/beamspace.hpp"
#include "beamsnr/denoisers.hpp"

namespace beamsnr {

/// Default threshold parameter for the noise-power trigger rule, set by
/// the `calibrate-gamma` sweep (see data/calibration/): minimax of the
/// absolute mean-estimate bias over pure noise and a +10 dB reference
/// condition at M = 64.
inline constexpr double kDefaultGamma = 3.25;

/// Result of the sorted-power split: n0_hat is the mean of the first
/// split_index (1-based) entries of the sorted power sequence it was
/// computed from.
struct NoiseEstimate {
    double n0_hat = 0.0;
    std::size_t split_index = 0;
    double gamma = 0.0;
};

enum class SnrOutcome {
    Finite,
    Infinite, // n0_hat == 0 with p_x_hat > 0
    Undefined // n0_hat == 0 with p_x_hat == 0
};

struct SnrEstimate {
    double p_x_hat = 0.0;
    double rho_hat = 0.0; // +inf / NaN mirror the non-Finite outcomes
    SnrOutcome outcome = SnrOutcome::Finite;
};

/// Blind MSE estimate decomposed as residual_term + n0 + divergence_term,
/// where residual_term = ||xhat(y) - y||^2 / M and divergence_term =
/// (n0/M) * (divergence - 2M). May be negative; no clamping is applied.
struct MseEstimate {
    double mse_hat = 0.0;
    double residual_term = 0.0;
    double divergence_term = 0.0;
};

/// Single pass over the ascending power sequence: maintain the running
/// mean of the first i entries and stop at the first i (1..M-1) whose
/// forward difference p(i+1) - p(i) reaches gamma times that mean. The
/// entries up to the split are classified as noise and averaged. If no
/// index triggers, all M entries are noise (split_index = M). O(M).
NoiseEstimate estimate_noise_power(const BeamspacePower& p_sorted, double gamma);

/// max{ ||y||^2 - M * n0_hat, 0 } / M.
double estimate_signal_power(const CVec& y, const NoiseEstimate& noise);

SnrEstimate estimate_snr(double p_x_hat, const NoiseEstimate& noise);

/// SURE with the estimated noise power substituted for N0. The denoiser
/// must provide an analytic divergence; apply in the beamspace domain
/// when the sparsity premise is wanted (the operation itself is
/// domain-agnostic).
MseEstimate estimate_mse_blind(const CVec& y, const Denoiser& denoiser,
                               const NoiseEstimate& noise);

/// Same estimate with the exact noise power; separates the risk
/// estimator's own error from noise-estimation error in experiments.
MseEstimate sure_with_known_noise(const CVec& y, const Denoiser& denoiser, double n0_true);

} // namespace beamsnr

#endif // BEAMSNR_ESTIMATORS_HPP
