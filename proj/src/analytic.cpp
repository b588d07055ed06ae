// SPDX-License-Identifier: Apache-2.0

#include "mmnoma/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "mmnoma/geometry.hpp"

namespace mmnoma {

namespace {

using quad = boost::math::quadrature::gauss_kronrod<double, 15>;

double integrate(const AnalyticContext& ctx, const auto& f, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  return quad::integrate(f, lo, hi, ctx.outer.max_depth, ctx.outer.rel_tol);
}

// Distance beyond which the remaining nearest-user density mass is below
// the configured tail allowance.
double near_tail_radius(const AnalyticContext& ctx) {
  return std::sqrt(ctx.cfg.sigma2 * std::log(1.0 / ctx.outer.tail_mass) /
                   ctx.cfg.num_pairs);
}

// The joint SIC success event reduces to the near user's own-signal event
// only when the far-message threshold is the weaker constraint.
void check_near_regime(const SystemConfig& cfg, double tau_k, double tau_j) {
  if (tau_j == 0.0) return;  // far-message check trivially satisfied
  if (!(tau_k > 0.0) || !(cfg.a_j > cfg.a_k * tau_j * (1.0 + 1.0 / tau_k)))
    throw unsupported_regime_error(
        "near-user coverage outside the implemented regime: needs "
        "a_j > a_k*tau_j*(1+1/tau_k)");
}

void check_closed_form(const AnalyticContext& ctx) {
  if (!ctx.loose_network)
    throw unsupported_regime_error(
        "closed-form coverage requires the loose-network flag");
  if (std::abs(ctx.cfg.pathloss.alpha_L - 2.0) > 1e-9)
    throw unsupported_regime_error("closed-form coverage requires alpha_L = 2");
}

// Near-user coverage at explicit threshold/power coefficient.
double near_value(const AnalyticContext& ctx, double tau, double beta) {
  const auto& cfg = ctx.cfg;
  const double sigma = std::sqrt(cfg.sigma2);
  const double r_tail = near_tail_radius(ctx);

  auto los = [&](double r) {
    return theta_kappa(LinkKind::los, r, tau, beta, ctx) *
           nearest_distance_pdf(r, cfg.num_pairs, sigma);
  };
  double acc = integrate(ctx, los, 0.0, std::min(cfg.R_L, r_tail));
  if (!ctx.loose_network && r_tail > cfg.R_L) {
    auto nlos = [&](double r) {
      return theta_kappa(LinkKind::nlos, r, tau, beta, ctx) *
             nearest_distance_pdf(r, cfg.num_pairs, sigma);
    };
    acc += integrate(ctx, nlos, cfg.R_L, r_tail);
  }
  return std::clamp(acc, 0.0, 1.0);
}

// Far-user nested distance integral at a fixed misalignment gain already
// folded into beta.
double far_distance_integral(const AnalyticContext& ctx, double tau, double beta) {
  const auto& cfg = ctx.cfg;
  const double sigma = std::sqrt(cfg.sigma2);
  const double r_tail = near_tail_radius(ctx);
  const double spread = 2.0 * cfg.sigma2 * std::log(1.0 / ctx.outer.tail_mass);

  auto outer_los = [&](double r1) {
    const double hi = std::min(cfg.R_L, std::sqrt(r1 * r1 + spread));
    auto inner = [&](double rf) {
      return theta_kappa(LinkKind::los, rf, tau, beta, ctx) *
             far_conditional_pdf(rf, r1, sigma);
    };
    return integrate(ctx, inner, r1, hi) *
           nearest_distance_pdf(r1, cfg.num_pairs, sigma);
  };
  double acc = integrate(ctx, outer_los, 0.0, std::min(cfg.R_L, r_tail));

  if (!ctx.loose_network && r_tail > cfg.R_L) {
    auto outer_nlos = [&](double r1) {
      const double hi = std::sqrt(r1 * r1 + spread);
      auto inner = [&](double rf) {
        return theta_kappa(LinkKind::nlos, rf, tau, beta, ctx) *
               far_conditional_pdf(rf, r1, sigma);
      };
      return integrate(ctx, inner, r1, hi) *
             nearest_distance_pdf(r1, cfg.num_pairs, sigma);
    };
    acc += integrate(ctx, outer_nlos, cfg.R_L, r_tail);
  }
  return acc;
}

// Far-user coverage at explicit threshold and decodability gap a_j − τ·a_k;
// averages the nested integral over the serving beam's misalignment.
double far_value(const AnalyticContext& ctx, double tau, double gap) {
  const int n2 = ctx.rule2.size();
  std::vector<double> vals(n2, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n2; ++i) {
    const double g = ctx.rule2.nodes[i] * ctx.cfg.angular_ratio;
    const double gain = fejer_gain(g, ctx.cfg.M);
    if (tau == 0.0)  // threshold-free: kernel is 1, gain irrelevant
      vals[i] = far_distance_integral(ctx, 0.0, 1.0);
    else if (gain > 0.0)
      vals[i] = far_distance_integral(ctx, tau, gap * gain);
  }
  double acc = 0.0;  // fixed-order reduction: identical across thread counts
  for (int i = 0; i < n2; ++i) acc += vals[i] * ctx.rule2.weights[i];
  return std::clamp(std::numbers::pi / (2.0 * n2) * acc, 0.0, 1.0);
}

double near_closed_value(const AnalyticContext& ctx, double tau, double beta) {
  check_closed_form(ctx);
  if (!(beta > 0.0)) throw std::domain_error("near coverage: beta must be positive");
  const auto& cfg = ctx.cfg;
  const auto& pl = cfg.pathloss;
  const double noise = cfg.noise_power();
  const double psi_l = psi(pl.N_L);
  const double k_over_s2 = cfg.num_pairs / cfg.sigma2;

  double acc = 0.0, comb = 1.0;
  for (int n = 1; n <= pl.N_L; ++n) {
    comb *= static_cast<double>(pl.N_L - n + 1) / n;
    const double a = n * psi_l * tau * noise / (beta * cfg.M * pl.C_L) + k_over_s2;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    acc += sign * comb * std::expm1(-a * cfg.R_L * cfg.R_L) / a;
  }
  return std::clamp(k_over_s2 * acc, 0.0, 1.0);
}

double far_closed_value(const AnalyticContext& ctx, double tau, double gap) {
  check_closed_form(ctx);
  if (!(gap > 0.0))
    throw unsupported_regime_error("far coverage: a_j - tau_j*a_k must be positive");
  const auto& cfg = ctx.cfg;
  const auto& pl = cfg.pathloss;
  const double noise = cfg.noise_power();
  const double psi_l = psi(pl.N_L);
  const double s2 = cfg.sigma2;
  const double chi = (2.0 * cfg.num_pairs - 1.0) / (2.0 * s2);
  const double rl2 = cfg.R_L * cfg.R_L;

  auto g_hat = [&](double zeta) {
    const double gain = fejer_gain(zeta * cfg.angular_ratio, cfg.M);
    if (tau > 0.0 && gain <= 0.0) return 0.0;
    double acc = 0.0, comb = 1.0;
    for (int n = 1; n <= pl.N_L; ++n) {
      comb *= static_cast<double>(pl.N_L - n + 1) / n;
      const double q = (tau == 0.0 ? 0.0
                                   : n * psi_l * tau * noise /
                                         (gap * gain * cfg.M * pl.C_L)) +
                       1.0 / (2.0 * s2);
      const double sign = (n % 2 == 0) ? -1.0 : 1.0;
      acc += sign * comb * cfg.num_pairs / (2.0 * s2 * s2 * q) *
             (1.0 / (q + chi) + q * std::exp(-(q + chi) * rl2) / ((q + chi) * chi) -
              std::exp(-q * rl2) / chi);
    }
    return acc;
  };
  // misalignment average: (π/2n₂)·Σ Ĝ(ζ_i)√(1−ζ_i²)
  return std::clamp(0.5 * ctx.rule2.integrate(g_hat), 0.0, 1.0);
}

}  // namespace

AnalyticContext::AnalyticContext(SystemConfig c, int n1, int n2, bool loose)
    : cfg(c), rule1(n1), rule2(n2), loose_network(loose) {
  cfg.validate();
}

double laplace_interference(double s, const AnalyticContext& ctx) {
  if (std::isnan(s) || s < 0.0)
    throw std::domain_error("laplace_interference: s must be nonnegative");
  if (s == 0.0) return 1.0;

  const auto& cfg = ctx.cfg;
  const auto& pl = cfg.pathloss;
  const int n1 = ctx.rule1.size();
  const double nlos_scale = s * cfg.M * pl.C_N / (pl.N_N * std::pow(cfg.R_L, pl.alpha_N));
  const double los_scale = pl.N_L * std::pow(cfg.R_L, pl.alpha_L) / (s * cfg.M * pl.C_L);

  double acc = 0.0;
  for (int i = 0; i < n1; ++i) {
    const double gain = fejer_gain(ctx.rule1.nodes[i] * cfg.angular_ratio, cfg.M);
    if (gain <= 0.0) continue;  // null: no interference contribution
    acc += (rho_N(nlos_scale * gain, pl) - rho_L(los_scale / gain, pl)) *
           ctx.rule1.weights[i];
  }
  const double pref = std::numbers::pi * std::numbers::pi * cfg.lambda_c *
                      cfg.R_L * cfg.R_L / (2.0 * n1);
  return std::exp(-pref * acc);
}

double theta_kappa(LinkKind kind, double r, double tau, double beta,
                   const AnalyticContext& ctx) {
  if (!(r > 0.0)) throw std::domain_error("theta_kappa: distance must be positive");
  if (tau < 0.0) throw std::domain_error("theta_kappa: threshold must be nonnegative");
  if (!(beta > 0.0))
    throw std::domain_error("theta_kappa: beta must be positive (a_j - tau_j*a_k <= 0?)");
  if (tau == 0.0) return 1.0;

  const auto& cfg = ctx.cfg;
  const auto& pl = cfg.pathloss;
  const bool los = kind == LinkKind::los;
  const double alpha = los ? pl.alpha_L : pl.alpha_N;
  const double intercept = los ? pl.C_L : pl.C_N;
  const int shape = los ? pl.N_L : pl.N_N;

  const double base = psi(shape) * tau * std::pow(r, alpha) / (beta * cfg.M * intercept);
  const double noise = cfg.noise_power();

  double acc = 0.0, comb = 1.0;
  for (int n = 1; n <= shape; ++n) {
    comb *= static_cast<double>(shape - n + 1) / n;
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    const double li = ctx.loose_network ? 1.0 : laplace_interference(n * base, ctx);
    acc += sign * comb * std::exp(-n * base * noise) * li;
  }
  return std::clamp(acc, 0.0, 1.0);
}

CoverageResult coverage_near(const AnalyticContext& ctx) {
  check_near_regime(ctx.cfg, ctx.cfg.tau_k, ctx.cfg.tau_j);
  return {near_value(ctx, ctx.cfg.tau_k, ctx.cfg.a_k),
          CoverageMethod::theorem_integral, ctx.rule1.size(), 0, 0};
}

CoverageResult coverage_near_closed(const AnalyticContext& ctx) {
  check_near_regime(ctx.cfg, ctx.cfg.tau_k, ctx.cfg.tau_j);
  return {near_closed_value(ctx, ctx.cfg.tau_k, ctx.cfg.a_k),
          CoverageMethod::closed_form, 0, 0, 0};
}

CoverageResult coverage_far(const AnalyticContext& ctx) {
  const double gap = ctx.cfg.a_j - ctx.cfg.tau_j * ctx.cfg.a_k;
  if (!(gap > 0.0))
    throw unsupported_regime_error("far coverage: a_j - tau_j*a_k must be positive");
  return {far_value(ctx, ctx.cfg.tau_j, gap), CoverageMethod::theorem_integral,
          ctx.rule1.size(), ctx.rule2.size(), 0};
}

CoverageResult coverage_far_closed(const AnalyticContext& ctx) {
  const double gap = ctx.cfg.a_j - ctx.cfg.tau_j * ctx.cfg.a_k;
  return {far_closed_value(ctx, ctx.cfg.tau_j, gap), CoverageMethod::closed_form,
          0, ctx.rule2.size(), 0};
}

double throughput(const AnalyticContext& ctx, AccessMode mode, CoverageMethod method) {
  if (method == CoverageMethod::monte_carlo)
    throw std::invalid_argument("throughput: Monte Carlo estimation lives in the simulator");
  const auto& cfg = ctx.cfg;
  const bool closed = method == CoverageMethod::closed_form;
  const double tk = rate_threshold(cfg.rate_k, cfg.bandwidth, mode);
  const double tj = rate_threshold(cfg.rate_j, cfg.bandwidth, mode);

  double pk, pj;
  if (mode == AccessMode::noma) {
    const double gap = cfg.a_j - tj * cfg.a_k;
    if (!(gap > 0.0))
      throw unsupported_regime_error(
          "NOMA rate thresholds violate decodability: a_j - tau_j*a_k <= 0");
    check_near_regime(cfg, tk, tj);
    pk = closed ? near_closed_value(ctx, tk, cfg.a_k) : near_value(ctx, tk, cfg.a_k);
    pj = closed ? far_closed_value(ctx, tj, gap) : far_value(ctx, tj, gap);
  } else {
    // full power, no intra-pair interference, half band already in thresholds
    pk = closed ? near_closed_value(ctx, tk, 1.0) : near_value(ctx, tk, 1.0);
    pj = closed ? far_closed_value(ctx, tj, 1.0) : far_value(ctx, tj, 1.0);
  }
  return cfg.rate_k * pk + cfg.rate_j * pj;
}

}  // namespace mmnoma
