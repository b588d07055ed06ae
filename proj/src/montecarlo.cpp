// SPDX-License-Identifier: Apache-2.0

#include "mmnoma/montecarlo.hpp"

#include <cmath>

#include "mmnoma/geometry.hpp"

namespace mmnoma {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Aggregate interference power at a user position: every interfering BS
// contributes M·|g|²·G_F(Δθ)·L_p(dist), fading shape set by the link's
// own LOS state.
double interference_at(const Point2D& user, const NetworkRealization& net,
                       const SystemConfig& cfg, std::mt19937_64& rng) {
  double acc = 0.0;
  for (std::size_t b = 0; b < net.bs_points.size(); ++b) {
    const double dist = std::hypot(net.bs_points[b].x - user.x,
                                   net.bs_points[b].y - user.y);
    const int shape = dist <= cfg.R_L ? cfg.pathloss.N_L : cfg.pathloss.N_N;
    const double fading = sample_nakagami_power(shape, rng);
    acc += aligned_gain(fading, cfg.M) *
           fejer_gain(net.interferer_angles[b], cfg.M) *
           path_loss(dist, cfg.pathloss, cfg.R_L);
  }
  return acc;
}

struct SuccessCounts {
  long near = 0;
  long far = 0;
};

// Success of one drop against explicit thresholds; `split_power` selects
// NOMA power-domain sharing versus OMA full-power links.
SuccessCounts score_trial(const SystemConfig& cfg, double tau_k, double tau_j,
                          bool split_power, std::mt19937_64& rng) {
  const TrialOutcome t = simulate_trial(cfg, rng);
  SuccessCounts c;
  if (split_power) {
    c.near = (t.sinr_k2j > tau_j && t.sinr_k > tau_k) ? 1 : 0;
    c.far = t.sinr_j > tau_j ? 1 : 0;
  } else {
    const double noise = cfg.noise_power();
    c.near = t.signal_k / (t.interference_k + noise) > tau_k ? 1 : 0;
    c.far = t.signal_j / (t.interference_j + noise) > tau_j ? 1 : 0;
  }
  return c;
}

SuccessCounts run_trials(const SystemConfig& cfg, double tau_k, double tau_j,
                         bool split_power, long trials, std::uint64_t seed,
                         bool parallel) {
  long near = 0, far = 0;
  if (parallel) {
#pragma omp parallel for reduction(+ : near, far) schedule(static)
    for (long i = 0; i < trials; ++i) {
      auto rng = trial_rng(seed, i);
      const SuccessCounts c = score_trial(cfg, tau_k, tau_j, split_power, rng);
      near += c.near;
      far += c.far;
    }
  } else {
    for (long i = 0; i < trials; ++i) {
      auto rng = trial_rng(seed, i);
      const SuccessCounts c = score_trial(cfg, tau_k, tau_j, split_power, rng);
      near += c.near;
      far += c.far;
    }
  }
  return {near, far};
}

CoverageEstimate make_estimate(long hits, long trials, std::uint64_t seed) {
  CoverageEstimate e;
  e.p_hat = static_cast<double>(hits) / trials;
  e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / trials);
  e.trials = trials;
  e.seed = seed;
  return e;
}

std::pair<CoverageEstimate, CoverageEstimate> coverage_impl(
    const SystemConfig& cfg, long trials, std::uint64_t seed, bool parallel) {
  if (trials < 1) throw std::domain_error("estimate_coverage: trials must be >= 1");
  const SuccessCounts c =
      run_trials(cfg, cfg.tau_k, cfg.tau_j, true, trials, seed, parallel);
  return {make_estimate(c.near, trials, seed), make_estimate(c.far, trials, seed)};
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, long index) {
  return std::mt19937_64(
      splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index))));
}

TrialOutcome simulate_trial(const SystemConfig& cfg, std::mt19937_64& rng) {
  const NetworkRealization net = sample_network(cfg, cfg.sim_window(), rng);
  const Point2D& near_pos = net.typical_user_offsets[net.near_index];
  const Point2D& far_pos = net.typical_user_offsets[net.far_index];
  const double noise = cfg.noise_power();

  TrialOutcome t;
  t.r_1 = near_pos.norm();
  t.r_f = far_pos.norm();

  // near user: beam perfectly aligned
  const int shape_k = t.r_1 <= cfg.R_L ? cfg.pathloss.N_L : cfg.pathloss.N_N;
  t.signal_k = aligned_gain(sample_nakagami_power(shape_k, rng), cfg.M) *
               path_loss(t.r_1, cfg.pathloss, cfg.R_L);
  t.interference_k = interference_at(near_pos, net, cfg, rng);

  // far user: beam steered at the near user, own gain takes a random
  // misalignment in ±q/λ
  std::uniform_real_distribution<double> uni(-cfg.angular_ratio, cfg.angular_ratio);
  const double own_angle = uni(rng);
  const int shape_j = t.r_f <= cfg.R_L ? cfg.pathloss.N_L : cfg.pathloss.N_N;
  t.signal_j = aligned_gain(sample_nakagami_power(shape_j, rng), cfg.M) *
               fejer_gain(own_angle, cfg.M) * path_loss(t.r_f, cfg.pathloss, cfg.R_L);
  t.interference_j = interference_at(far_pos, net, cfg, rng);

  t.sinr_k2j = cfg.a_j * t.signal_k / (cfg.a_k * t.signal_k + t.interference_k + noise);
  t.sinr_k = cfg.a_k * t.signal_k / (t.interference_k + noise);
  t.sinr_j = cfg.a_j * t.signal_j / (cfg.a_k * t.signal_j + t.interference_j + noise);
  return t;
}

std::pair<CoverageEstimate, CoverageEstimate> estimate_coverage(
    const SystemConfig& cfg, long trials, std::uint64_t seed) {
  return coverage_impl(cfg, trials, seed, true);
}

std::pair<CoverageEstimate, CoverageEstimate> estimate_coverage_serial(
    const SystemConfig& cfg, long trials, std::uint64_t seed) {
  return coverage_impl(cfg, trials, seed, false);
}

RateEstimate estimate_throughput(const SystemConfig& cfg, AccessMode mode,
                                 long trials, std::uint64_t seed) {
  if (trials < 1) throw std::domain_error("estimate_throughput: trials must be >= 1");
  const double tau_k = rate_threshold(cfg.rate_k, cfg.bandwidth, mode);
  const double tau_j = rate_threshold(cfg.rate_j, cfg.bandwidth, mode);
  const bool noma = mode == AccessMode::noma;
  // salt the stream per mode: OMA re-simulates rather than re-scoring
  const std::uint64_t mode_seed = noma ? seed : splitmix64(seed ^ 0x4f4d41ULL);
  const SuccessCounts c =
      run_trials(cfg, tau_k, tau_j, noma, trials, mode_seed, true);
  const CoverageEstimate ek = make_estimate(c.near, trials, mode_seed);
  const CoverageEstimate ej = make_estimate(c.far, trials, mode_seed);

  RateEstimate r;
  r.rate = cfg.rate_k * ek.p_hat + cfg.rate_j * ej.p_hat;
  r.std_err = std::hypot(cfg.rate_k * ek.std_err, cfg.rate_j * ej.std_err);
  r.trials = trials;
  r.seed = mode_seed;
  return r;
}

}  // namespace mmnoma
