// SPDX-License-Identifier: Apache-2.0
//
// Times the OpenMP trial loop against the serial reference and checks that
// both produce identical coverage counts.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "mmnoma/montecarlo.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const long trials = argc > 1 ? std::atol(argv[1]) : 20000;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
  mmnoma::SystemConfig cfg;

  std::printf("%10s %12s %12s %8s %7s\n", "trials", "parallel[s]", "serial[s]",
              "speedup", "match");
  for (long n = trials / 4; n <= trials; n *= 2) {
    auto t0 = clock_type::now();
    const auto par = mmnoma::estimate_coverage(cfg, n, seed);
    const double t_par = seconds_since(t0);

    t0 = clock_type::now();
    const auto ser = mmnoma::estimate_coverage_serial(cfg, n, seed);
    const double t_ser = seconds_since(t0);

    const bool match = par.first.p_hat == ser.first.p_hat &&
                       par.second.p_hat == ser.second.p_hat;
    std::printf("%10ld %12.3f %12.3f %8.2f %7s\n", n, t_par, t_ser,
                t_ser / t_par, match ? "yes" : "NO");
    if (!match) return 1;
  }
  return 0;
}
