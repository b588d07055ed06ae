// SPDX-License-Identifier: Apache-2.0
//
// Analytical coverage and throughput: interference Laplace transform,
// conditional coverage kernels, the two coverage results (near/far user),
// their closed forms for the loose network, and system throughput.

#pragma once

#include <stdexcept>

#include "mmnoma/model.hpp"
#include "mmnoma/specfun.hpp"

namespace mmnoma {

/// Thrown when a requested evaluation falls outside the regime an
/// expression is valid in (never silently approximated).
class unsupported_regime_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LinkKind { los, nlos };

enum class CoverageMethod { theorem_integral, closed_form, monte_carlo };

/// Settings for the adaptive outer integrals over user distances.
struct OuterQuadrature {
  double rel_tol = 1e-9;   ///< relative tolerance per integral
  int max_depth = 12;      ///< adaptive bisection depth
  double tail_mass = 1e-9; ///< Gaussian tail mass dropped at truncation
};

/// Immutable evaluation context: configuration plus quadrature rules.
/// `loose_network` enables the sparse-deployment simplification
/// (inter-cluster interference and NLOS desired links ignored) that the
/// closed forms require.
struct AnalyticContext {
  SystemConfig cfg;
  ChebyshevRule rule1;  ///< Laplace-transform nodes (n_1)
  ChebyshevRule rule2;  ///< far-user misalignment nodes (n_2)
  OuterQuadrature outer;
  bool loose_network = false;

  explicit AnalyticContext(SystemConfig c, int n1 = 50, int n2 = 50,
                           bool loose = false);
};

struct CoverageResult {
  double value = 0.0;  ///< probability in [0,1]
  CoverageMethod method = CoverageMethod::theorem_integral;
  int nodes_n1 = 0;    ///< Laplace-transform node count used
  int nodes_n2 = 0;    ///< misalignment node count used (far user)
  long trials = 0;     ///< Monte Carlo only
};

/// Laplace transform of the aggregate inter-cluster interference at s:
/// exp(−(π²λ_c R_L²/2n₁)·Σ_i [ρ_N(sMC_N G_F/(N_N R_L^{α_N})) −
/// ρ_L(N_L R_L^{α_L}/(sMG_F C_L))]·√(1−ζ_i²)) with G_F at misalignment
/// ζ_i·q/λ. Equals 1 at s = 0; nonincreasing in s.
double laplace_interference(double s, const AnalyticContext& ctx);

/// Conditional coverage of a link at distance r with threshold tau and
/// effective power coefficient beta: the alternating Nakagami-bound sum
/// Σ_n (−1)^{n+1}·C(N_κ,n)·exp(−nψ_κ·τ·r^{α_κ}·σ_n²/(βMC_κ))·L_I(·).
/// With the loose-network flag the L_I factor is 1.
double theta_kappa(LinkKind kind, double r, double tau, double beta,
                   const AnalyticContext& ctx);

/// Near-user coverage: ∫ Θ over the nearest-user distance density, split
/// at the LOS disc edge. Valid in the regime a_j > a_k·τ_j·(1+1/τ_k),
/// where the joint SIC event reduces to the own-signal event.
CoverageResult coverage_near(const AnalyticContext& ctx);

/// Closed-form near-user coverage (loose network, α_L = 2).
CoverageResult coverage_near_closed(const AnalyticContext& ctx);

/// Far-user coverage: misalignment average over the nested distance
/// integrals, split at the LOS disc edge. Requires a_j − τ_j·a_k > 0.
CoverageResult coverage_far(const AnalyticContext& ctx);

/// Closed-form far-user coverage (loose network, α_L = 2).
CoverageResult coverage_far_closed(const AnalyticContext& ctx);

/// System throughput in bps: R_k·P_k + R_j·P_j with thresholds derived
/// from the configured rates (NOMA: 2^{R/B}−1 on the full band; OMA:
/// 2^{2R/B}−1 on half band, full power, no intra-pair interference).
double throughput(const AnalyticContext& ctx, AccessMode mode,
                  CoverageMethod method = CoverageMethod::theorem_integral);

}  // namespace mmnoma
