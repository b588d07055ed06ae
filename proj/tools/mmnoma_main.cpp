// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. `run fig1|fig2|fig3` reproduces the canned
// experiment sweeps; `run sweep` sweeps one config key over a grid.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmnoma/config_io.hpp"
#include "mmnoma/sweep.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  long trials = 100000;
  std::uint64_t seed = 1;
  std::vector<std::string> methods{"theorem", "closed-form", "monte-carlo"};
  std::string out;  // empty: derived from the command name; "-": stdout
  std::vector<int> nodes{50, 50};
  std::string param;
  std::vector<double> grid;
  std::vector<std::string> quantities{"near", "far"};
};

mmnoma::CoverageMethod parse_method(const std::string& name) {
  if (name == "theorem" || name == "analytic")
    return mmnoma::CoverageMethod::theorem_integral;
  if (name == "closed-form" || name == "closed")
    return mmnoma::CoverageMethod::closed_form;
  if (name == "monte-carlo" || name == "mc")
    return mmnoma::CoverageMethod::monte_carlo;
  throw mmnoma::config_error("unknown method '" + name +
                             "' (expected theorem|closed-form|monte-carlo)");
}

mmnoma::Quantity parse_quantity(const std::string& name) {
  if (name == "near") return mmnoma::Quantity::near;
  if (name == "far") return mmnoma::Quantity::far;
  if (name == "rate-noma" || name == "rate_noma")
    return mmnoma::Quantity::rate_noma;
  if (name == "rate-oma" || name == "rate_oma")
    return mmnoma::Quantity::rate_oma;
  throw mmnoma::config_error("unknown quantity '" + name +
                             "' (expected near|far|rate-noma|rate-oma)");
}

void add_common_options(CLI::App* sub, CliOptions& opts) {
  sub->add_option("--config", opts.config_path,
                  "Flat key=value config file; defaults apply otherwise");
  sub->add_option("--trials", opts.trials, "Monte Carlo trials per point")
      ->capture_default_str();
  sub->add_option("--seed", opts.seed, "Monte Carlo seed")
      ->capture_default_str();
  sub->add_option("--methods", opts.methods,
                  "Methods to run: theorem, closed-form, monte-carlo")
      ->delimiter(',');
  sub->add_option("--out", opts.out, "Output path; '-' writes to stdout");
  sub->add_option("--nodes", opts.nodes,
                  "Chebyshev node counts n1,n2 for the analytic methods")
      ->delimiter(',')
      ->expected(1, 2);
}

int execute(const std::string& command, const CliOptions& opts) {
  mmnoma::SystemConfig base;
  if (!opts.config_path.empty()) base = mmnoma::load_config(opts.config_path);

  mmnoma::SweepSpec spec;
  spec.trials = opts.trials;
  spec.seed = opts.seed;
  spec.nodes_n1 = opts.nodes.at(0);
  spec.nodes_n2 = opts.nodes.size() > 1 ? opts.nodes.at(1) : opts.nodes.at(0);
  spec.methods.clear();
  for (const std::string& m : opts.methods)
    spec.methods.push_back(parse_method(m));

  const std::string out_path = opts.out.empty() ? command + ".csv" : opts.out;
  std::ofstream file;
  if (out_path != "-") {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return 1;
    }
  }
  std::ostream& out = out_path == "-" ? std::cout : file;

  mmnoma::SweepSummary summary;
  if (command == "sweep") {
    spec.param = opts.param;
    spec.grid = opts.grid;
    spec.quantities.clear();
    for (const std::string& q : opts.quantities)
      spec.quantities.push_back(parse_quantity(q));
    summary = mmnoma::run_sweep(spec, base, out);
  } else {
    summary = mmnoma::run_figure(command, base, spec, out);
  }

  std::cerr << command << ": " << summary.rows << " rows";
  if (summary.errors > 0) std::cerr << ", " << summary.errors << " errors";
  if (out_path != "-") std::cerr << " -> " << out_path;
  std::cerr << "\n";
  return summary.errors > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coverage and rate toolkit for clustered mmWave NOMA downlinks"};
  app.require_subcommand(1);
  CLI::App* run =
      app.add_subcommand("run", "Run a canned figure or a parameter sweep");
  run->require_subcommand(1);

  CliOptions opts;
  std::string command;
  const std::pair<const char*, const char*> figures[] = {
      {"fig1", "Coverage probability versus SNR at two BS densities"},
      {"fig2", "Coverage probability versus antenna count for (K, sigma^2) variants"},
      {"fig3", "NOMA and OMA system rate versus SNR for power-split and M variants"},
  };
  for (const auto& [name, desc] : figures) {
    CLI::App* sub = run->add_subcommand(name, desc);
    add_common_options(sub, opts);
    sub->callback([&command, name = std::string(name)] { command = name; });
  }
  CLI::App* sweep =
      run->add_subcommand("sweep", "Sweep one config key over a value grid");
  add_common_options(sweep, opts);
  sweep->add_option("--param", opts.param, "Config key to sweep")->required();
  sweep->add_option("--grid", opts.grid, "Comma-separated ascending values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--quantities", opts.quantities,
                    "Quantities to report: near, far, rate-noma, rate-oma")
      ->delimiter(',');
  sweep->callback([&command] { command = "sweep"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return execute(command, opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
