// SPDX-License-Identifier: Apache-2.0

#include "mmnoma/config_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mmnoma {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& value, const std::string& where) {
  char* end = nullptr;
  const double x = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0')
    throw config_error(where + ": invalid numeric value '" + value + "'");
  return x;
}

int parse_int(const std::string& value, const std::string& where) {
  const double x = parse_double(value, where);
  const int n = static_cast<int>(x);
  if (static_cast<double>(n) != x)
    throw config_error(where + ": expected an integer, got '" + value + "'");
  return n;
}

// Tracks which keys appeared so the post-parse fixups (a_j complement,
// carrier-derived intercepts) only fire when appropriate.
struct ParseState {
  bool saw_a_k = false, saw_a_j = false;
  bool saw_C_L = false, saw_C_N = false, saw_f_m = false;
  double f_m = 28e9;
};

void apply_key(SystemConfig& cfg, ParseState& st, const std::string& key,
               const std::string& value, const std::string& where) {
  if (key == "lambda_c") cfg.lambda_c = parse_double(value, where);
  else if (key == "sigma2") cfg.sigma2 = parse_double(value, where);
  else if (key == "K") cfg.num_pairs = parse_int(value, where);
  else if (key == "M") cfg.M = parse_int(value, where);
  else if (key == "R_L") cfg.R_L = parse_double(value, where);
  else if (key == "alpha_L") cfg.pathloss.alpha_L = parse_double(value, where);
  else if (key == "alpha_N") cfg.pathloss.alpha_N = parse_double(value, where);
  else if (key == "N_L") cfg.pathloss.N_L = parse_int(value, where);
  else if (key == "N_N") cfg.pathloss.N_N = parse_int(value, where);
  else if (key == "C_L") { cfg.pathloss.C_L = parse_double(value, where); st.saw_C_L = true; }
  else if (key == "C_N") { cfg.pathloss.C_N = parse_double(value, where); st.saw_C_N = true; }
  else if (key == "f_m") { st.f_m = parse_double(value, where); st.saw_f_m = true; }
  else if (key == "a_k") { cfg.a_k = parse_double(value, where); st.saw_a_k = true; }
  else if (key == "a_j") { cfg.a_j = parse_double(value, where); st.saw_a_j = true; }
  else if (key == "tau_k") cfg.tau_k = parse_double(value, where);
  else if (key == "tau_j") cfg.tau_j = parse_double(value, where);
  else if (key == "snr_db") cfg.snr_db = parse_double(value, where);
  else if (key == "q_over_lambda") cfg.angular_ratio = parse_double(value, where);
  else if (key == "B") cfg.bandwidth = parse_double(value, where);
  else if (key == "R_k") cfg.rate_k = parse_double(value, where);
  else if (key == "R_j") cfg.rate_j = parse_double(value, where);
  else if (key == "window_radius") cfg.window_radius = parse_double(value, where);
  else throw config_error(where + ": unknown key '" + key + "'");
}

void finish(SystemConfig& cfg, ParseState& st, const std::string& origin) {
  if (st.saw_f_m && !(st.f_m > 0.0))
    throw config_error(origin + ": f_m must be positive");
  if (st.saw_f_m) {
    // explicit intercepts win over the carrier-derived default
    if (!st.saw_C_L) cfg.pathloss.C_L = free_space_intercept(st.f_m);
    if (!st.saw_C_N) cfg.pathloss.C_N = free_space_intercept(st.f_m);
  }
  if (st.saw_a_k) {
    if (st.saw_a_j && std::abs(cfg.a_k + cfg.a_j - 1.0) > 1e-12)
      std::cerr << origin << ": warning: a_j=" << cfg.a_j
                << " inconsistent with a_k; using a_j=" << 1.0 - cfg.a_k << "\n";
    cfg.a_j = 1.0 - cfg.a_k;
  } else if (st.saw_a_j) {
    cfg.a_k = 1.0 - cfg.a_j;
  }
  cfg.validate();
}

}  // namespace

SystemConfig parse_config(std::istream& in, const std::string& origin) {
  SystemConfig cfg;
  ParseState st;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error(where + ": expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw config_error(where + ": empty key");
    apply_key(cfg, st, key, value, where);
  }
  finish(cfg, st, origin);
  return cfg;
}

SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file '" + path + "'");
  return parse_config(in, path);
}

void apply_override(SystemConfig& cfg, const std::string& key,
                    const std::string& value) {
  ParseState st;
  apply_key(cfg, st, key, value, "override " + key);
  if (key == "a_k") cfg.a_j = 1.0 - cfg.a_k;
  else if (key == "a_j") cfg.a_k = 1.0 - cfg.a_j;
  else if (key == "f_m") {
    cfg.pathloss.C_L = free_space_intercept(st.f_m);
    cfg.pathloss.C_N = free_space_intercept(st.f_m);
  }
}

std::string serialize_config(const SystemConfig& cfg) {
  std::ostringstream out;
  char buf[64];
  auto put = [&](const char* key, double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << key << '=' << buf << '\n';
  };
  put("lambda_c", cfg.lambda_c);
  put("sigma2", cfg.sigma2);
  out << "K=" << cfg.num_pairs << '\n';
  out << "M=" << cfg.M << '\n';
  put("R_L", cfg.R_L);
  put("alpha_L", cfg.pathloss.alpha_L);
  put("alpha_N", cfg.pathloss.alpha_N);
  out << "N_L=" << cfg.pathloss.N_L << '\n';
  out << "N_N=" << cfg.pathloss.N_N << '\n';
  put("C_L", cfg.pathloss.C_L);
  put("C_N", cfg.pathloss.C_N);
  put("a_k", cfg.a_k);
  put("a_j", cfg.a_j);
  put("tau_k", cfg.tau_k);
  put("tau_j", cfg.tau_j);
  put("snr_db", cfg.snr_db);
  put("q_over_lambda", cfg.angular_ratio);
  put("B", cfg.bandwidth);
  put("R_k", cfg.rate_k);
  put("R_j", cfg.rate_j);
  put("window_radius", cfg.window_radius);
  return out.str();
}

std::uint64_t config_hash(const SystemConfig& cfg) {
  const std::string text = serialize_config(cfg);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace mmnoma
