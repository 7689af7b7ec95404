// SPDX-License-Identifier: Apache-2.0
#ifndef BEAMSNR_DENOISERS_HPP
#define BEAMSNR_DENOISERS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "beamsnr/beamspace.hpp"

namespace beamsnr {

struct NoiseEstimate; // estimators.hpp

enum class DenoiserKind { SoftThreshold, Identity, Zero };

/// Element-wise shrinkage map with an analytic divergence. SoftThreshold
/// is the closed-form l1-regularized denoiser: each element's magnitude
/// is reduced by lambda, elements with |y_m| <= lambda are zeroed (the
/// boundary |y_m| == lambda belongs to the zero branch).
struct Denoiser {
    DenoiserKind kind = DenoiserKind::Identity;
    double lambda = 0.0; // ignored by Identity and Zero
};

Denoiser soft_threshold(double lambda);
Denoiser identity_denoiser();
Denoiser zero_denoiser();

CVec apply(const Denoiser& denoiser, const CVec& y);

/// Sum over elements of d Re{xhat_m}/d Re{y_m} + d Im{xhat_m}/d Im{y_m}.
/// SoftThreshold contributes 2 - lambda/|y_m| where |y_m| > lambda and 0
/// elsewhere; Identity contributes 2 per element, Zero contributes 0.
double divergence(const Denoiser& denoiser, const CVec& y);

struct LambdaSweep {
    std::vector<double> grid;
    std::vector<double> estimated_mse;
    double best_lambda = 0.0; // argmin of estimated_mse, ties toward smaller lambda
};

/// Evaluate the blind MSE estimate of the soft-threshold denoiser at each
/// lambda in `grid` (strictly increasing, nonnegative, nonempty).
LambdaSweep sweep_lambda(const CVec& y, std::span<const double> grid, const NoiseEstimate& noise);

/// 0 .. 6 in steps of 0.25.
std::vector<double> default_lambda_grid();

} // namespace beamsnr

#endif // BEAMSNR_DENOISERS_HPP
