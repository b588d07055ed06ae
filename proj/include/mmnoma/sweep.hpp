// SPDX-License-Identifier: Apache-2.0
//
// Experiment orchestration: generic single-parameter sweeps and the three
// canned figure sweeps, emitting deterministic delimiter-separated rows.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mmnoma/analytic.hpp"
#include "mmnoma/model.hpp"

namespace mmnoma {

enum class Quantity { near, far, rate_noma, rate_oma };

/// One labeled curve: extra config overrides on top of the base config,
/// optionally with its own quantity list (else the sweep default applies).
struct SweepVariant {
  std::string label = "default";
  std::vector<std::pair<std::string, std::string>> overrides;
  std::vector<Quantity> quantities;
};

struct SweepSpec {
  std::string param;                   ///< swept config key
  std::vector<double> grid;            ///< nonempty, ascending
  std::vector<SweepVariant> variants;  ///< empty → single default variant
  std::vector<CoverageMethod> methods{CoverageMethod::theorem_integral,
                                      CoverageMethod::closed_form,
                                      CoverageMethod::monte_carlo};
  std::vector<Quantity> quantities{Quantity::near, Quantity::far};
  long trials = 100000;
  std::uint64_t seed = 1;
  int nodes_n1 = 50;
  int nodes_n2 = 50;
};

struct SweepSummary {
  long rows = 0;
  long errors = 0;
};

const char* method_name(CoverageMethod m);
const char* quantity_name(Quantity q);

/// Runs the sweep, writing a comment block (resolved base config, run
/// settings), a header line, and one row per grid value × variant × method
/// × quantity in that deterministic order. Row-level failures are recorded
/// in the status column and counted; the run continues.
SweepSummary run_sweep(const SweepSpec& spec, const SystemConfig& base,
                       std::ostream& out);

/// Canned sweeps. `common` supplies methods/trials/seed/node counts; the
/// swept parameter, grid and variants are fixed per figure:
///  fig1 — coverage vs SNR 60–90 dB at BS densities 1/(250²π), 1/(100²π);
///  fig2 — coverage vs M 1–20 at SNR 83 dB for (K,σ²) variants;
///  fig3 — NOMA/OMA system rate vs SNR 55–95 dB for a_k and M variants.
SweepSummary run_figure(const std::string& name, const SystemConfig& base,
                        const SweepSpec& common, std::ostream& out);

}  // namespace mmnoma
