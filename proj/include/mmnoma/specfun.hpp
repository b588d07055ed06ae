// SPDX-License-Identifier: Apache-2.0
//
// Special functions backing the coverage analysis: the real Gauss
// hypergeometric ₂F₁ restricted to z ≤ 0, first-kind Gauss-Chebyshev
// quadrature, and the ρ_L/ρ_N interference kernels.

#pragma once

#include <stdexcept>
#include <vector>

#include "mmnoma/model.hpp"

namespace mmnoma {

/// Thrown when a series fails its accuracy target within the term budget;
/// never a silent truncation.
class accuracy_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ₂F₁(a,b;c;z) for z ≤ 0 to relative accuracy ~1e-10: Pfaff transform
/// onto w = z/(z−1) ∈ [0,1), then direct series.
double gauss_2f1(double a, double b, double c, double z);

/// LOS interference kernel: ₂F₁(N_L, N_L+2/α_L; N_L+2/α_L+1; −v)·2v^{N_L}/(α_L N_L+2).
/// Nondecreasing from 0 (v=0) to 1 (v→∞).
double rho_L(double v, const PathLossParams& p);

/// NLOS interference kernel ₂F₁(−2/α_N, N_N; 1−2/α_N; −v); equals 1 at v=0
/// and grows like v^{2/α_N}. Requires α_N > 2.
double rho_N(double v, const PathLossParams& p);

/// ψ(N) = N·(N!)^{−1/N}: rate constant of the Nakagami CDF bound used by
/// the coverage theorems.
double psi(int N);

/// First-kind Gauss-Chebyshev rule in the convention
/// ∫_{−1}^{1} f(x) dx ≈ (π/n)·Σ_i f(ζ_i)·√(1−ζ_i²).
struct ChebyshevRule {
  explicit ChebyshevRule(int n);

  int size() const { return static_cast<int>(nodes.size()); }

  template <typename F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (int i = 0; i < size(); ++i) acc += f(nodes[i]) * weights[i];
    return std::numbers::pi / size() * acc;
  }

  std::vector<double> nodes;    ///< ζ_i = cos((2i−1)π/2n), i = 1..n
  std::vector<double> weights;  ///< √(1−ζ_i²)
};

inline ChebyshevRule chebyshev_rule(int n) { return ChebyshevRule(n); }

}  // namespace mmnoma
