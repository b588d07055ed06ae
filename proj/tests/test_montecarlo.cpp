// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mmnoma/montecarlo.hpp"

using namespace mmnoma;

TEST_CASE("trial_rng streams are reproducible and decorrelated") {
  std::mt19937_64 a = trial_rng(42, 7);
  std::mt19937_64 b = trial_rng(42, 7);
  for (int i = 0; i < 16; ++i) CHECK(a() == b());
  std::mt19937_64 c = trial_rng(42, 8);
  std::mt19937_64 d = trial_rng(43, 7);
  CHECK(trial_rng(42, 7)() != c());
  CHECK(trial_rng(42, 7)() != d());
}

TEST_CASE("simulate_trial outcomes satisfy the signal-model identities") {
  SystemConfig cfg;
  const double noise = cfg.noise_power();
  for (long i = 0; i < 500; ++i) {
    std::mt19937_64 rng = trial_rng(9, i);
    const TrialOutcome t = simulate_trial(cfg, rng);
    REQUIRE(t.r_1 > 0.0);
    REQUIRE(t.r_f >= t.r_1);
    REQUIRE(t.interference_k >= 0.0);
    REQUIRE(t.interference_j >= 0.0);
    REQUIRE(t.signal_k > 0.0);
    REQUIRE(t.signal_j >= 0.0);  // far beam may sit in a pattern null
    CHECK(t.sinr_k ==
          doctest::Approx(cfg.a_k * t.signal_k / (t.interference_k + noise))
              .epsilon(1e-12));
    CHECK(t.sinr_k2j ==
          doctest::Approx(cfg.a_j * t.signal_k /
                          (cfg.a_k * t.signal_k + t.interference_k + noise))
              .epsilon(1e-12));
    CHECK(t.sinr_j ==
          doctest::Approx(cfg.a_j * t.signal_j /
                          (cfg.a_k * t.signal_j + t.interference_j + noise))
              .epsilon(1e-12));
  }
}

TEST_CASE("estimate_coverage counts the documented per-trial events") {
  SystemConfig cfg;
  const long n = 400;
  const std::uint64_t seed = 31;
  long near_ok = 0, far_ok = 0;
  for (long i = 0; i < n; ++i) {
    std::mt19937_64 rng = trial_rng(seed, i);
    const TrialOutcome t = simulate_trial(cfg, rng);
    if (t.sinr_k2j > cfg.tau_j && t.sinr_k > cfg.tau_k) ++near_ok;
    if (t.sinr_j > cfg.tau_j) ++far_ok;
  }
  const auto [near, far] = estimate_coverage(cfg, n, seed);
  CHECK(near.p_hat == static_cast<double>(near_ok) / n);
  CHECK(far.p_hat == static_cast<double>(far_ok) / n);
  CHECK(near.trials == n);
  CHECK(near.seed == seed);
  CHECK(near.std_err ==
        doctest::Approx(std::sqrt(near.p_hat * (1.0 - near.p_hat) / n))
            .epsilon(1e-12));
}

TEST_CASE("parallel and serial estimators agree exactly") {
  SystemConfig cfg;
  for (std::uint64_t seed : {1ULL, 77ULL}) {
    const auto par = estimate_coverage(cfg, 2000, seed);
    const auto ser = estimate_coverage_serial(cfg, 2000, seed);
    CHECK(par.first.p_hat == ser.first.p_hat);
    CHECK(par.second.p_hat == ser.second.p_hat);
    CHECK(par.first.std_err == ser.first.std_err);
    CHECK(par.second.std_err == ser.second.std_err);
  }
}

TEST_CASE("estimates reproduce across calls and move with the seed") {
  SystemConfig cfg;
  const auto a = estimate_coverage(cfg, 1500, 5);
  const auto b = estimate_coverage(cfg, 1500, 5);
  CHECK(a.first.p_hat == b.first.p_hat);
  CHECK(a.second.p_hat == b.second.p_hat);
  const auto c = estimate_coverage(cfg, 1500, 6);
  CHECK((a.first.p_hat != c.first.p_hat || a.second.p_hat != c.second.p_hat));
}

TEST_CASE("near-user distances follow the cluster geometry") {
  SystemConfig cfg;
  const long n = 20000;
  double sum = 0.0;
  for (long i = 0; i < n; ++i) {
    std::mt19937_64 rng = trial_rng(123, i);
    sum += simulate_trial(cfg, rng).r_1;
  }
  // min of 2K Rayleigh(σ) distances is Rayleigh(σ/sqrt(2K))
  const double sigma = std::sqrt(cfg.sigma2);
  const double expect =
      sigma / std::sqrt(2.0 * cfg.num_pairs) * std::sqrt(std::numbers::pi / 2);
  CHECK(sum / n == doctest::Approx(expect).epsilon(0.02));
}

TEST_CASE("coverage at the reference point is in the plausible band") {
  SystemConfig cfg;  // 83 dB SNR
  const auto [near, far] = estimate_coverage(cfg, 4000, 2);
  CHECK(near.p_hat > 0.7);
  CHECK(near.p_hat < 0.95);
  CHECK(far.p_hat > 0.38);
  CHECK(far.p_hat < 0.65);
  CHECK(near.p_hat > far.p_hat - 0.05);
}

TEST_CASE("estimate_throughput recombines coverage at the rate thresholds") {
  SystemConfig cfg;
  const long n = 3000;
  const std::uint64_t seed = 11;
  const RateEstimate rate = estimate_throughput(cfg, AccessMode::noma, n, seed);
  SystemConfig at_rates = cfg;
  at_rates.tau_k = rate_threshold(cfg.rate_k, cfg.bandwidth, AccessMode::noma);
  at_rates.tau_j = rate_threshold(cfg.rate_j, cfg.bandwidth, AccessMode::noma);
  const auto [near, far] = estimate_coverage(at_rates, n, seed);
  CHECK(rate.rate ==
        doctest::Approx(cfg.rate_k * near.p_hat + cfg.rate_j * far.p_hat)
            .epsilon(1e-13));
  CHECK(rate.std_err ==
        doctest::Approx(std::hypot(cfg.rate_k * near.std_err,
                                   cfg.rate_j * far.std_err))
            .epsilon(1e-12));
  CHECK(rate.trials == n);

  const RateEstimate oma = estimate_throughput(cfg, AccessMode::oma, n, seed);
  CHECK(oma.rate > 0.0);
  CHECK(oma.rate <= cfg.rate_k + cfg.rate_j);
  const RateEstimate oma2 = estimate_throughput(cfg, AccessMode::oma, n, seed);
  CHECK(oma.rate == oma2.rate);
}

TEST_CASE("single-pair clusters simulate cleanly") {
  SystemConfig cfg;
  cfg.num_pairs = 1;
  std::mt19937_64 rng = trial_rng(3, 0);
  const TrialOutcome t = simulate_trial(cfg, rng);
  CHECK(t.r_f >= t.r_1);
  const auto [near, far] = estimate_coverage(cfg, 500, 3);
  CHECK(near.p_hat >= 0.0);
  CHECK(far.p_hat <= 1.0);
}
