// SPDX-License-Identifier: Apache-2.0
//
// Physical-layer primitives shared by the analysis and the simulator:
// dual-slope blockage path loss, Fejér-kernel array gain, Nakagami fading,
// and the validated system configuration.

#pragma once

#include <numbers>
#include <random>
#include <stdexcept>

namespace mmnoma {

/// Thrown when a configuration violates a model invariant.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Free-space intercept (c / 4πf)² at the 1 m reference distance.
constexpr double free_space_intercept(double carrier_hz) {
  const double x = 299792458.0 / (4.0 * std::numbers::pi * carrier_hz);
  return x * x;
}

/// Blockage-disc path loss: LOS law inside the disc, NLOS law outside,
/// with an independent Nakagami fading shape per state.
struct PathLossParams {
  double C_L = free_space_intercept(28e9);  ///< LOS intercept, linear
  double C_N = free_space_intercept(28e9);  ///< NLOS intercept, linear
  double alpha_L = 2.0;                     ///< LOS path-loss exponent
  double alpha_N = 4.0;                     ///< NLOS path-loss exponent, > 2
  int N_L = 3;                              ///< LOS Nakagami shape
  int N_N = 2;                              ///< NLOS Nakagami shape
};

enum class AccessMode { noma, oma };

/// Full parameter set; defaults describe the reference macro deployment
/// at 28 GHz with two NOMA pairs per cluster.
struct SystemConfig {
  double lambda_c = 1.0 / (250.0 * 250.0 * std::numbers::pi);  ///< BS density, per m²
  double sigma2 = 100.0;        ///< user-scatter variance, m²
  int num_pairs = 2;            ///< K; a cluster holds 2K users
  int M = 10;                   ///< antenna element count
  double R_L = 100.0;           ///< LOS disc radius, m
  PathLossParams pathloss;
  double a_k = 0.1;             ///< near-user power coefficient
  double a_j = 0.9;             ///< far-user power coefficient
  double tau_k = 1.0;           ///< near-user SINR threshold, linear
  double tau_j = 0.2;           ///< far-user SINR threshold, linear
  double snr_db = 83.0;         ///< transmit SNR (1/σ_n²), dB
  double angular_ratio = 0.25;  ///< q/λ; beam misalignment is uniform on ±q/λ
  double bandwidth = 1e8;       ///< B, Hz
  double rate_k = 1e8;          ///< near-user target rate, bps
  double rate_j = 3e7;          ///< far-user target rate, bps
  double window_radius = 0.0;   ///< simulation disc radius, m; 0 selects auto

  /// Noise power σ_n² with transmit power normalized to 1.
  double noise_power() const;
  int users_per_cluster() const { return 2 * num_pairs; }
  /// Effective simulation window: window_radius, or 10/sqrt(λ_c·π) when 0.
  double sim_window() const;
  /// Throws config_error with a distinct message per violated invariant.
  void validate() const;
};

/// Piecewise path loss C_L·r^{−α_L} (r ≤ R_L) / C_N·r^{−α_N} (r > R_L).
double path_loss(double r, const PathLossParams& p, double R_L);

/// Normalized Fejér-kernel array gain sin²(πMΔθ)/(M²sin²(πΔθ)) ∈ [0,1];
/// evaluates to the limit 1 where sin(πΔθ) vanishes.
double fejer_gain(double delta_theta, int M);

/// Effective desired-link gain under perfect alignment: M·|g|².
double aligned_gain(double fading_power, int M);

/// One draw of Nakagami fading power |g|²: Gamma(shape, 1/shape), unit mean.
double sample_nakagami_power(int shape, std::mt19937_64& rng);

/// SINR threshold achieving `rate` over `bandwidth`: 2^{R/B}−1 for NOMA
/// (full band), 2^{2R/B}−1 for OMA (half band per user).
double rate_threshold(double rate, double bandwidth, AccessMode mode);

}  // namespace mmnoma
