// SPDX-License-Identifier: Apache-2.0
#include "beamsnr/estimators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace beamsnr {

NoiseEstimate estimate_noise_power(const BeamspacePower& p_sorted, double gamma) {
    const std::vector<double>& p = p_sorted.sorted_power;
    const std::size_t m = p.size();
    if (m < 2) throw std::invalid_argument("estimate_noise_power: need M >= 2");
    if (!(gamma > 0.0)) throw std::invalid_argument("estimate_noise_power: gamma must be > 0");

    // Degenerate all-zero sequence: nothing to split, everything is noise.
    if (p.back() == 0.0) return {0.0, m, gamma};

    double running_sum = 0.0;
    for (std::size_t i = 1; i < m; ++i) {
        running_sum += p[i - 1];
        const double avg = running_sum / static_cast<double>(i);
        const double diff = p[i] - p[i - 1];
        if (diff >= gamma * avg) return {avg, i, gamma};
    }
    // No trigger: all M entries are noise.
    return {(running_sum + p.back()) / static_cast<double>(m), m, gamma};
}

double estimate_signal_power(const CVec& y, const NoiseEstimate& noise) {
    const double m = static_cast<double>(y.size());
    return std::max(norm_sq(y) - m * noise.n0_hat, 0.0) / m;
}

SnrEstimate estimate_snr(double p_x_hat, const NoiseEstimate& noise) {
    if (!(p_x_hat >= 0.0)) throw std::invalid_argument("estimate_snr: p_x_hat must be >= 0");
    SnrEstimate est;
    est.p_x_hat = p_x_hat;
    if (noise.n0_hat > 0.0) {
        est.rho_hat = p_x_hat / noise.n0_hat;
        est.outcome = SnrOutcome::Finite;
    } else if (p_x_hat > 0.0) {
        est.rho_hat = std::numeric_limits<double>::infinity();
        est.outcome = SnrOutcome::Infinite;
    } else {
        est.rho_hat = std::numeric_limits<double>::quiet_NaN();
        est.outcome = SnrOutcome::Undefined;
    }
    return est;
}

namespace {

MseEstimate sure_impl(const CVec& y, const Denoiser& denoiser, double n0) {
    const double m = static_cast<double>(y.size());
    const CVec xhat = apply(denoiser, y);
    double resid = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) resid += std::norm(xhat[i] - y[i]);

    MseEstimate est;
    est.residual_term = resid / m;
    est.divergence_term = n0 / m * (divergence(denoiser, y) - 2.0 * m);
    est.mse_hat = est.residual_term + n0 + est.divergence_term;
    return est;
}

} // namespace

MseEstimate estimate_mse_blind(const CVec& y, const Denoiser& denoiser,
                               const NoiseEstimate& noise) {
    return sure_impl(y, denoiser, noise.n0_hat);
}

MseEstimate sure_with_known_noise(const CVec& y, const Denoiser& denoiser, double n0_true) {
    if (!(n0_true >= 0.0))
        throw std::invalid_argument("sure_with_known_noise: N0 must be >= 0");
    return sure_impl(y, denoiser, n0_true);
}

} // namespace beamsnr
