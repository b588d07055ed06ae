// SPDX-License-Identifier: Apache-2.0
//
// Ground-truth network simulator: full signal model over sampled drops,
// with deterministic per-trial random streams so estimates reproduce
// exactly across thread counts.

#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "mmnoma/model.hpp"

namespace mmnoma {

/// One simulated drop of the typical pair.
struct TrialOutcome {
  double sinr_k2j = 0.0;         ///< near user decoding the far message
  double sinr_k = 0.0;           ///< near user decoding its own message
  double sinr_j = 0.0;           ///< far user decoding directly
  double r_1 = 0.0;              ///< near-user distance, m
  double r_f = 0.0;              ///< far-user distance, m
  double interference_k = 0.0;   ///< aggregate inter-cluster power at near user
  double interference_j = 0.0;   ///< aggregate inter-cluster power at far user
  double signal_k = 0.0;         ///< desired power at near user before the split
  double signal_j = 0.0;         ///< desired power at far user before the split
};

/// Binomial estimate with its standard error.
struct CoverageEstimate {
  double p_hat = 0.0;
  double std_err = 0.0;   ///< sqrt(p̂(1−p̂)/trials)
  long trials = 0;
  std::uint64_t seed = 0;
};

/// Throughput estimate: rate plus the error propagated from the two
/// coverage estimators.
struct RateEstimate {
  double rate = 0.0;      ///< bps
  double std_err = 0.0;   ///< bps
  long trials = 0;
  std::uint64_t seed = 0;
};

/// Isolated random stream for one trial, derived from (seed, index) by a
/// splitmix64 mix so streams are decorrelated and order-independent.
std::mt19937_64 trial_rng(std::uint64_t seed, long index);

/// Simulates one drop. Consumes the generator in a fixed documented order:
/// network realization (geometry module), near fading, near interference
/// fadings (BS index order), far own-beam angle, far fading, far
/// interference fadings.
TrialOutcome simulate_trial(const SystemConfig& cfg, std::mt19937_64& rng);

/// Coverage estimates for (near, far): near success is the joint SIC event
/// {γ_{k→j} > τ_j and γ_k > τ_k}, far success is {γ_j > τ_j}.
/// Parallelized over trials; identical results for any thread count.
std::pair<CoverageEstimate, CoverageEstimate> estimate_coverage(
    const SystemConfig& cfg, long trials, std::uint64_t seed);

/// Serial reference implementation of estimate_coverage, kept for testing
/// the parallel kernel; must agree bit-for-bit.
std::pair<CoverageEstimate, CoverageEstimate> estimate_coverage_serial(
    const SystemConfig& cfg, long trials, std::uint64_t seed);

/// System throughput with thresholds derived from the configured rates.
/// OMA re-simulates with full power, half band and no intra-pair term.
RateEstimate estimate_throughput(const SystemConfig& cfg, AccessMode mode,
                                 long trials, std::uint64_t seed);

}  // namespace mmnoma
