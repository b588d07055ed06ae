// SPDX-License-Identifier: Apache-2.0

#include "mmnoma/geometry.hpp"

namespace mmnoma {

namespace {
void check_sigma(double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("scatter sigma must be positive");
}
}  // namespace

double rayleigh_pdf(double v, double sigma) {
  check_sigma(sigma);
  if (v <= 0.0) return 0.0;
  const double s2 = sigma * sigma;
  return v / s2 * std::exp(-v * v / (2.0 * s2));
}

double rayleigh_cdf(double v, double sigma) {
  check_sigma(sigma);
  if (v <= 0.0) return 0.0;
  return -std::expm1(-v * v / (2.0 * sigma * sigma));
}

double nearest_distance_pdf(double r1, int K, double sigma) {
  check_sigma(sigma);
  if (K < 1) throw std::domain_error("nearest_distance_pdf: K must be at least 1");
  if (r1 < 0.0) throw std::domain_error("nearest_distance_pdf: r1 must be nonnegative");
  const double s2 = sigma * sigma;
  return 2.0 * K * r1 / s2 * std::exp(-K * r1 * r1 / s2);
}

double far_conditional_pdf(double rf, double r1, double sigma) {
  check_sigma(sigma);
  if (r1 < 0.0) throw std::domain_error("far_conditional_pdf: r1 must be nonnegative");
  if (rf <= r1) return 0.0;
  // survivor 1−CDF(r1) in a cancellation-free form
  const double surv = std::exp(-r1 * r1 / (2.0 * sigma * sigma));
  return rayleigh_pdf(rf, sigma) / surv;
}

NetworkRealization sample_network(const SystemConfig& cfg, double window_radius,
                                  std::mt19937_64& rng) {
  if (!(window_radius > 0.0))
    throw std::domain_error("sample_network: window radius must be positive");

  NetworkRealization net;
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  // interfering BSs: Poisson count, uniform positions in the disc
  const double mean = cfg.lambda_c * std::numbers::pi * window_radius * window_radius;
  std::poisson_distribution<int> pois(mean);
  const int n_bs = pois(rng);
  net.bs_points.reserve(n_bs);
  for (int i = 0; i < n_bs; ++i) {
    const double r = window_radius * std::sqrt(uni(rng));
    const double th = 2.0 * std::numbers::pi * uni(rng);
    net.bs_points.push_back({r * std::cos(th), r * std::sin(th)});
  }

  net.interferer_angles.reserve(n_bs);
  for (int i = 0; i < n_bs; ++i)
    net.interferer_angles.push_back((2.0 * uni(rng) - 1.0) * cfg.angular_ratio);

  // typical cluster: 2K symmetric normal offsets around the origin BS
  const int n_users = cfg.users_per_cluster();
  std::normal_distribution<double> gauss(0.0, std::sqrt(cfg.sigma2));
  net.typical_user_offsets.reserve(n_users);
  for (int i = 0; i < n_users; ++i) {
    const double x = gauss(rng);
    const double y = gauss(rng);
    net.typical_user_offsets.push_back({x, y});
  }

  // NR pairing: nearest user, then a uniform pick among the rest
  net.near_index = 0;
  double best = net.typical_user_offsets[0].norm();
  for (int i = 1; i < n_users; ++i) {
    const double d = net.typical_user_offsets[i].norm();
    if (d < best) {
      best = d;
      net.near_index = i;
    }
  }
  std::uniform_int_distribution<int> pick(0, n_users - 2);
  const int k = pick(rng);
  net.far_index = k >= net.near_index ? k + 1 : k;
  return net;
}

}  // namespace mmnoma
