#pragma once

// Runtime configuration: an optional JSON config file overridden by flags.

#include "hodgesig/roots.hpp"
#include "hodgesig/spectrum.hpp"

#include <optional>
#include <string>

namespace hodgesig::io {

struct Config {
  PrecisionLadder ladder;
  long max_q = 9;
  int max_g = 4;
  int extension_depth = kDefaultExtensionDepth;
  int decimal_digits = 30;
  unsigned jobs = 1;
  std::optional<std::string> cache_dir;
};

/// Reads keys precision_bits, max_escalations, max_q, max_g,
/// extension_depth, decimal_digits, jobs and cache_dir. Unknown keys and
/// out-of-range values raise InputError.
Config load_config(const std::string& path);

/// The settings that can change a document, in canonical text form; part of
/// every cache key.
std::string fingerprint(const Config& config);

}  // namespace hodgesig::io
