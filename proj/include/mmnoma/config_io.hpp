// SPDX-License-Identifier: Apache-2.0
//
// Flat key=value configuration files, single-key overrides, canonical
// serialization, and the config hash used to tag output rows.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "mmnoma/model.hpp"

namespace mmnoma {

/// Loads, post-processes (a_j auto-complement, carrier-derived intercepts)
/// and validates a config file. '#' comments and blank lines are allowed;
/// unspecified keys keep the reference defaults. Errors name key and line.
SystemConfig load_config(const std::string& path);

/// Same as load_config over an already-open stream; `origin` labels errors.
SystemConfig parse_config(std::istream& in, const std::string& origin);

/// Applies one key=value pair to a config (the file key set). Setting a_k
/// re-balances a_j to 1−a_k; setting f_m rederives both intercepts.
void apply_override(SystemConfig& cfg, const std::string& key,
                    const std::string& value);

/// Canonical one-key-per-line rendering of a resolved config.
std::string serialize_config(const SystemConfig& cfg);

/// FNV-1a 64-bit hash of the canonical rendering.
std::uint64_t config_hash(const SystemConfig& cfg);

}  // namespace mmnoma
