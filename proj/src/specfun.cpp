// SPDX-License-Identifier: Apache-2.0

#include "mmnoma/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace mmnoma {

namespace {

constexpr int kMaxTerms = 4000;
constexpr double kRelTol = 1e-15;

// Above this argument the transformed ₂F₁ series for ρ_L/ρ_N lose accuracy
// (w = v/(1+v) approaches 1); switch to exact large-argument expansions.
constexpr double kLargeArg = 8.0;

std::string describe(double a, double b, double c, double z) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "2F1(%g,%g;%g;%g)", a, b, c, z);
  return buf;
}

}  // namespace

double gauss_2f1(double a, double b, double c, double z) {
  if (!(z <= 0.0)) throw std::domain_error("gauss_2f1: argument must be <= 0");
  if (c <= 0.0 && std::abs(c - std::nearbyint(c)) < 1e-12)
    throw std::domain_error("gauss_2f1: c is at a non-positive-integer pole");
  if (z == 0.0) return 1.0;

  // Pfaff: ₂F₁(a,b;c;z) = (1−z)^{−a}·₂F₁(a, c−b; c; z/(z−1)).  Put the
  // smaller of a,b in the exponent slot: the transformed terms behave like
  // n^{a−b−1}·w^n, so this choice decays fastest.
  const double p = std::min(a, b);
  const double q = std::max(a, b);
  const double w = z / (z - 1.0);

  double term = 1.0, sum = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    term *= (p + n) * (c - q + n) / ((c + n) * (n + 1.0)) * w;
    sum += term;
    if (std::abs(term) <= kRelTol * std::abs(sum))
      return std::pow(1.0 - z, -p) * sum;
  }
  throw accuracy_error("gauss_2f1: series did not converge in 4000 terms for " +
                       describe(a, b, c, z));
}

double rho_L(double v, const PathLossParams& p) {
  if (std::isnan(v) || v < 0.0)
    throw std::domain_error("rho_L: argument must be nonnegative");
  const double alpha = p.alpha_L;
  const int N = p.N_L;
  if (!(alpha > 0.0) || N < 1)
    throw std::domain_error("rho_L: invalid LOS path-loss parameters");
  if (v == 0.0) return 0.0;
  if (std::isinf(v)) return 1.0;

  const double b = N + 2.0 / alpha;
  if (v <= kLargeArg)
    return gauss_2f1(N, b, b + 1.0, -v) * 2.0 * std::pow(v, N) / (alpha * N + 2.0);

  // Large argument.  ρ_L(v) = (2/α)v^{−2/α}∫₀^v u^{2/α−1}(u/(1+u))^N du; for
  // α = 2 the integral is elementary, otherwise use the connection formula
  // at 1/v (needs 2/α non-integer — guaranteed here away from α = 2).
  if (std::abs(alpha - 2.0) < 1e-6) {
    double acc = v - N * std::log1p(v);
    double comb = static_cast<double>(N);  // running C(N,i), starts at i=1
    for (int i = 2; i <= N; ++i) {
      comb *= static_cast<double>(N - i + 1) / i;
      const double sign = (i % 2 == 0) ? 1.0 : -1.0;
      acc += comb * sign * (std::pow(1.0 + v, 1.0 - i) - 1.0) / (1.0 - i);
    }
    return acc / v;
  }
  const double r = 2.0 / alpha;
  if (std::abs(r - std::nearbyint(r)) < 1e-9)
    throw accuracy_error("rho_L: large-argument expansion needs non-integer 2/alpha_L");
  const double t1 = gauss_2f1(N, -r, 1.0 - r, -1.0 / v);
  const double c2 = 2.0 * std::tgamma(N + r + 1.0) * std::tgamma(-r) /
                    ((alpha * N + 2.0) * std::tgamma(static_cast<double>(N)));
  return t1 + c2 * std::pow(v, -r);
}

double rho_N(double v, const PathLossParams& p) {
  if (std::isnan(v) || v < 0.0)
    throw std::domain_error("rho_N: argument must be nonnegative");
  const double alpha = p.alpha_N;
  const int N = p.N_N;
  if (!(alpha > 2.0))
    throw std::domain_error("rho_N: alpha_N must exceed 2");
  if (N < 1) throw std::domain_error("rho_N: invalid NLOS Nakagami shape");

  const double r = 2.0 / alpha;  // in (0,1), so no Gamma poles below
  if (v <= kLargeArg) return gauss_2f1(-r, N, 1.0 - r, -v);

  // Large argument: leading v^{2/α} growth plus the v^{−N} correction.
  const double t1 =
      std::tgamma(1.0 - r) * std::tgamma(N + r) / std::tgamma(static_cast<double>(N)) * std::pow(v, r);
  const double c2 = std::tgamma(1.0 - r) * std::tgamma(-r - N) /
                    (std::tgamma(-r) * std::tgamma(1.0 - r - N));
  const double t2 =
      c2 * std::pow(v, -static_cast<double>(N)) * gauss_2f1(N, N + r, 1.0 + N + r, -1.0 / v);
  return t1 + t2;
}

double psi(int N) {
  if (N < 1) throw std::domain_error("psi: N must be at least 1");
  return N * std::exp(-std::lgamma(N + 1.0) / N);
}

ChebyshevRule::ChebyshevRule(int n) {
  if (n < 1) throw std::domain_error("ChebyshevRule: node count must be at least 1");
  nodes.resize(n);
  weights.resize(n);
  for (int i = 1; i <= n; ++i) {
    const double z = std::cos((2.0 * i - 1.0) * std::numbers::pi / (2.0 * n));
    nodes[i - 1] = z;
    weights[i - 1] = std::sqrt(1.0 - z * z);
  }
}

}  // namespace mmnoma
