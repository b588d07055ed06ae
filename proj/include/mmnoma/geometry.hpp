// SPDX-License-Identifier: Apache-2.0
//
// Poisson cluster process sampling and the distance distributions used by
// the coverage integrals: Rayleigh scatter, nearest-of-2K, and the
// conditional far-user law.

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "mmnoma/model.hpp"

namespace mmnoma {

struct Point2D {
  double x = 0.0;
  double y = 0.0;
  double norm() const { return std::hypot(x, y); }
};

/// One network drop around the typical BS at the origin.
struct NetworkRealization {
  std::vector<Point2D> bs_points;            ///< interfering BSs (origin excluded)
  std::vector<Point2D> typical_user_offsets; ///< 2K Gaussian cluster offsets
  int near_index = 0;                        ///< argmin offset norm (ties: lowest index)
  int far_index = 0;                         ///< uniform over the remaining 2K−1
  std::vector<double> interferer_angles;     ///< beam misalignment per BS, in ±q/λ
};

/// Rayleigh scatter density (v/σ²)·exp(−v²/2σ²) for v > 0, else 0.
double rayleigh_pdf(double v, double sigma);

/// Rayleigh scatter CDF 1 − exp(−v²/2σ²) for v > 0, else 0.
double rayleigh_cdf(double v, double sigma);

/// Density of the nearest of 2K i.i.d. scatter distances:
/// (2K·r₁/σ²)·exp(−K·r₁²/σ²).
double nearest_distance_pdf(double r1, int K, double sigma);

/// Density of a uniformly selected non-nearest user given the nearest is at
/// r₁: Rayleigh density renormalized to (r₁,∞); zero at or below r₁.
double far_conditional_pdf(double rf, double r1, double sigma);

/// Samples one drop: Poisson(λ_c·π·W²) interferers uniform in the disc of
/// radius `window_radius`, one misalignment angle per interferer, 2K user
/// offsets, and the near/far pair selection.
///
/// Draw order is fixed (count, positions, angles, offsets, far pick) so a
/// seeded generator reproduces the drop exactly.
NetworkRealization sample_network(const SystemConfig& cfg, double window_radius,
                                  std::mt19937_64& rng);

}  // namespace mmnoma
