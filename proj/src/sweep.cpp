// SPDX-License-Identifier: Apache-2.0

#include "mmnoma/sweep.hpp"

#include <cstdint>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "mmnoma/config_io.hpp"
#include "mmnoma/montecarlo.hpp"

namespace mmnoma {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_hash(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}

// Per-cell lazy evaluation state: contexts and Monte Carlo passes are
// shared by every row of one (grid value, variant) cell.
struct Cell {
  const SweepSpec& spec;
  SystemConfig cfg;
  std::optional<AnalyticContext> theorem_ctx;
  std::optional<AnalyticContext> closed_ctx;
  std::optional<std::pair<CoverageEstimate, CoverageEstimate>> mc_cov;
  std::optional<RateEstimate> mc_noma, mc_oma;

  Cell(const SweepSpec& s, SystemConfig c) : spec(s), cfg(std::move(c)) {}

  const AnalyticContext& ctx(bool loose) {
    auto& slot = loose ? closed_ctx : theorem_ctx;
    if (!slot) slot.emplace(cfg, spec.nodes_n1, spec.nodes_n2, loose);
    return *slot;
  }
  const std::pair<CoverageEstimate, CoverageEstimate>& coverage_mc() {
    if (!mc_cov) mc_cov = estimate_coverage(cfg, spec.trials, spec.seed);
    return *mc_cov;
  }
  const RateEstimate& rate_mc(AccessMode mode) {
    auto& slot = mode == AccessMode::noma ? mc_noma : mc_oma;
    if (!slot) slot = estimate_throughput(cfg, mode, spec.trials, spec.seed);
    return *slot;
  }
};

struct RowValue {
  double estimate = 0.0;
  double std_err = -1.0;  // < 0: not a Monte Carlo row
  long trials = 0;
};

RowValue evaluate(Cell& cell, CoverageMethod method, Quantity q) {
  RowValue v;
  switch (method) {
    case CoverageMethod::theorem_integral:
    case CoverageMethod::closed_form: {
      const bool closed = method == CoverageMethod::closed_form;
      const AnalyticContext& ctx = cell.ctx(closed);
      switch (q) {
        case Quantity::near:
          v.estimate = (closed ? coverage_near_closed(ctx) : coverage_near(ctx)).value;
          break;
        case Quantity::far:
          v.estimate = (closed ? coverage_far_closed(ctx) : coverage_far(ctx)).value;
          break;
        case Quantity::rate_noma:
          v.estimate = throughput(ctx, AccessMode::noma, method);
          break;
        case Quantity::rate_oma:
          v.estimate = throughput(ctx, AccessMode::oma, method);
          break;
      }
      break;
    }
    case CoverageMethod::monte_carlo: {
      v.trials = cell.spec.trials;
      switch (q) {
        case Quantity::near:
        case Quantity::far: {
          const auto& [near, far] = cell.coverage_mc();
          const CoverageEstimate& e = q == Quantity::near ? near : far;
          v.estimate = e.p_hat;
          v.std_err = e.std_err;
          break;
        }
        case Quantity::rate_noma:
        case Quantity::rate_oma: {
          const RateEstimate& e = cell.rate_mc(
              q == Quantity::rate_noma ? AccessMode::noma : AccessMode::oma);
          v.estimate = e.rate;
          v.std_err = e.std_err;
          break;
        }
      }
      break;
    }
  }
  return v;
}

void check_spec(const SweepSpec& spec) {
  if (spec.param.empty()) throw config_error("sweep: param must be set");
  if (spec.grid.empty()) throw config_error("sweep: grid must be nonempty");
  for (std::size_t i = 1; i < spec.grid.size(); ++i)
    if (!(spec.grid[i] > spec.grid[i - 1]))
      throw config_error("sweep: grid must be strictly ascending");
  if (spec.methods.empty()) throw config_error("sweep: methods must be nonempty");
  if (spec.trials < 1) throw config_error("sweep: trials must be >= 1");
  if (spec.nodes_n1 < 1 || spec.nodes_n2 < 1)
    throw config_error("sweep: node counts must be >= 1");
}

}  // namespace

const char* method_name(CoverageMethod m) {
  switch (m) {
    case CoverageMethod::theorem_integral: return "theorem";
    case CoverageMethod::closed_form: return "closed-form";
    case CoverageMethod::monte_carlo: return "monte-carlo";
  }
  return "?";
}

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::near: return "near";
    case Quantity::far: return "far";
    case Quantity::rate_noma: return "rate-noma";
    case Quantity::rate_oma: return "rate-oma";
  }
  return "?";
}

SweepSummary run_sweep(const SweepSpec& spec, const SystemConfig& base,
                       std::ostream& out) {
  check_spec(spec);
  const std::vector<SweepVariant> variants =
      spec.variants.empty() ? std::vector<SweepVariant>{SweepVariant{}}
                            : spec.variants;

  out << "# sweep param=" << spec.param << "\n";
  out << "# methods=";
  for (std::size_t i = 0; i < spec.methods.size(); ++i)
    out << (i ? "," : "") << method_name(spec.methods[i]);
  out << "\n# trials=" << spec.trials << " seed=" << spec.seed
      << " nodes=" << spec.nodes_n1 << "," << spec.nodes_n2 << "\n";
  out << "# base config:\n";
  std::istringstream cfg_lines(serialize_config(base));
  for (std::string line; std::getline(cfg_lines, line);)
    out << "#   " << line << "\n";
  out << "param,value,variant,method,quantity,estimate,stderr,trials,"
         "config_hash,status\n";

  SweepSummary summary;
  for (const double value : spec.grid) {
    for (const SweepVariant& var : variants) {
      const auto& quantities =
          var.quantities.empty() ? spec.quantities : var.quantities;

      // resolve the cell config; a failure here errors all the cell's rows
      std::string resolve_error;
      SystemConfig cfg = base;
      try {
        for (const auto& [k, v] : var.overrides) apply_override(cfg, k, v);
        apply_override(cfg, spec.param, fmt(value));
        cfg.validate();
      } catch (const std::exception& e) {
        resolve_error = e.what();
      }
      const std::string hash = resolve_error.empty() ? fmt_hash(config_hash(cfg)) : "";

      Cell cell(spec, cfg);
      for (const CoverageMethod method : spec.methods) {
        for (const Quantity q : quantities) {
          out << spec.param << ',' << fmt(value) << ',' << var.label << ','
              << method_name(method) << ',' << quantity_name(q) << ',';
          std::string status = resolve_error;
          RowValue row;
          if (status.empty()) {
            try {
              row = evaluate(cell, method, q);
            } catch (const std::exception& e) {
              status = e.what();
            }
          }
          ++summary.rows;
          if (status.empty()) {
            out << fmt(row.estimate) << ',';
            if (row.std_err >= 0.0) out << fmt(row.std_err) << ',' << row.trials;
            else out << ',';
            out << ',' << hash << ",ok\n";
          } else {
            ++summary.errors;
            out << ",,," << hash << ',' << sanitize(status) << "\n";
          }
        }
      }
    }
  }
  return summary;
}

SweepSummary run_figure(const std::string& name, const SystemConfig& base,
                        const SweepSpec& common, std::ostream& out) {
  SweepSpec spec = common;
  spec.variants.clear();
  if (name == "fig1") {
    spec.param = "snr_db";
    spec.grid = {60, 65, 70, 75, 80, 85, 90};
    spec.quantities = {Quantity::near, Quantity::far};
    const double sparse = 1.0 / (250.0 * 250.0 * std::numbers::pi);
    const double dense = 1.0 / (100.0 * 100.0 * std::numbers::pi);
    spec.variants = {
        {"lambda-250m", {{"lambda_c", fmt(sparse)}}, {}},
        {"lambda-100m", {{"lambda_c", fmt(dense)}}, {}},
    };
  } else if (name == "fig2") {
    spec.param = "M";
    spec.grid.clear();
    for (int m = 1; m <= 20; ++m) spec.grid.push_back(m);
    spec.quantities = {Quantity::near, Quantity::far};
    spec.variants = {
        {"K1-sigma100", {{"snr_db", "83"}, {"K", "1"}, {"sigma2", "100"}}, {}},
        {"K2-sigma100", {{"snr_db", "83"}, {"K", "2"}, {"sigma2", "100"}}, {}},
        {"K2-sigma50", {{"snr_db", "83"}, {"K", "2"}, {"sigma2", "50"}}, {}},
        {"K2-sigma200", {{"snr_db", "83"}, {"K", "2"}, {"sigma2", "200"}}, {}},
    };
  } else if (name == "fig3") {
    spec.param = "snr_db";
    spec.grid = {55, 60, 65, 70, 75, 80, 85, 90, 95};
    for (const char* m : {"10", "20"}) {
      const std::string suffix = std::string("-M") + m;
      spec.variants.push_back({"noma-ak0.1" + suffix,
                               {{"a_k", "0.1"}, {"M", m}},
                               {Quantity::rate_noma}});
      spec.variants.push_back({"noma-ak0.6" + suffix,
                               {{"a_k", "0.6"}, {"M", m}},
                               {Quantity::rate_noma}});
      spec.variants.push_back(
          {"oma" + suffix, {{"M", m}}, {Quantity::rate_oma}});
    }
  } else {
    throw config_error("unknown figure '" + name + "' (expected fig1|fig2|fig3)");
  }
  return run_sweep(spec, base, out);
}

}  // namespace mmnoma
