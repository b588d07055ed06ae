// SPDX-License-Identifier: Apache-2.0

#include "mmnoma/model.hpp"

#include <cmath>

namespace mmnoma {

double SystemConfig::noise_power() const { return std::pow(10.0, -snr_db / 10.0); }

double SystemConfig::sim_window() const {
  return window_radius > 0.0 ? window_radius
                             : 10.0 / std::sqrt(lambda_c * std::numbers::pi);
}

void SystemConfig::validate() const {
  if (!(lambda_c > 0.0)) throw config_error("lambda_c must be positive");
  if (!(sigma2 > 0.0)) throw config_error("sigma2 must be positive");
  if (num_pairs < 1) throw config_error("K must be at least 1");
  if (M < 1) throw config_error("M must be at least 1");
  if (!(R_L > 0.0)) throw config_error("R_L must be positive");
  if (!(pathloss.C_L > 0.0) || !(pathloss.C_N > 0.0))
    throw config_error("path-loss intercepts C_L, C_N must be positive");
  if (!(pathloss.alpha_L > 0.0)) throw config_error("alpha_L must be positive");
  if (!(pathloss.alpha_N > 2.0)) throw config_error("alpha_N must exceed 2");
  if (pathloss.N_L < 1 || pathloss.N_N < 1)
    throw config_error("Nakagami shapes N_L, N_N must be at least 1");
  if (std::abs(a_k + a_j - 1.0) > 1e-12)
    throw config_error("power coefficients must satisfy a_k + a_j = 1");
  if (!(a_k > 0.0 && a_k < 1.0))
    throw config_error("power coefficient a_k must lie in (0, 1)");
  if (tau_k < 0.0 || tau_j < 0.0)
    throw config_error("SINR thresholds must be nonnegative");
  if (!(a_j - tau_j * a_k > 0.0))
    throw config_error("tau_j violates decodability: a_j - tau_j*a_k must be positive");
  if (!(angular_ratio > 0.0)) throw config_error("angular_ratio must be positive");
  if (!(bandwidth > 0.0)) throw config_error("bandwidth must be positive");
  if (!(rate_k > 0.0) || !(rate_j > 0.0)) throw config_error("rates must be positive");
  if (window_radius < 0.0) throw config_error("window_radius must be nonnegative");
}

double path_loss(double r, const PathLossParams& p, double R_L) {
  if (!(r > 0.0)) throw std::domain_error("path_loss: distance must be positive");
  return r <= R_L ? p.C_L * std::pow(r, -p.alpha_L)
                  : p.C_N * std::pow(r, -p.alpha_N);
}

double fejer_gain(double delta_theta, int M) {
  if (M < 1) throw std::domain_error("fejer_gain: M must be at least 1");
  const double s = std::sin(std::numbers::pi * delta_theta);
  if (std::abs(s) < 1e-12) return 1.0;  // integer offset: kernel limit
  const double sm = std::sin(std::numbers::pi * M * delta_theta);
  return sm * sm / (static_cast<double>(M) * M * s * s);
}

double aligned_gain(double fading_power, int M) {
  if (M < 1) throw std::domain_error("aligned_gain: M must be at least 1");
  if (fading_power < 0.0)
    throw std::domain_error("aligned_gain: fading power must be nonnegative");
  return M * fading_power;
}

double sample_nakagami_power(int shape, std::mt19937_64& rng) {
  if (shape < 1) throw std::domain_error("sample_nakagami_power: shape must be at least 1");
  std::gamma_distribution<double> dist(shape, 1.0 / shape);
  return dist(rng);
}

double rate_threshold(double rate, double bandwidth, AccessMode mode) {
  if (!(rate > 0.0) || !(bandwidth > 0.0))
    throw std::domain_error("rate_threshold: rate and bandwidth must be positive");
  const double x = rate / bandwidth;
  return std::exp2(mode == AccessMode::noma ? x : 2.0 * x) - 1.0;
}

}  // namespace mmnoma
