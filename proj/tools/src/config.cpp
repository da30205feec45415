#include "hodgesig/io/config.hpp"

#include "hodgesig/io/documents.hpp"

#include <fstream>
#include <sstream>

namespace hodgesig::io {

namespace {

long bounded(const Json& value, const std::string& key, long lo, long hi) {
  if (!value.is_number_integer()) throw InputError("config key '" + key + "' must be an integer");
  long v = value.get<long>();
  if (v < lo || v > hi) {
    throw InputError("config key '" + key + "' must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got " + std::to_string(v));
  }
  return v;
}

}  // namespace

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json doc = parse_document(buffer.str());
  if (!doc.is_object()) throw InputError("config file must hold a JSON object");

  Config config;
  for (const auto& [key, value] : doc.items()) {
    if (key == "schema") continue;
    if (key == "precision_bits") config.ladder.initial_bits = static_cast<unsigned>(bounded(value, key, 32, 1 << 16));
    else if (key == "max_escalations") config.ladder.max_escalations = static_cast<unsigned>(bounded(value, key, 0, 16));
    else if (key == "max_q") config.max_q = bounded(value, key, 2, 1L << 20);
    else if (key == "max_g") config.max_g = static_cast<int>(bounded(value, key, 1, 4));
    else if (key == "extension_depth") config.extension_depth = static_cast<int>(bounded(value, key, 1, 64));
    else if (key == "decimal_digits") config.decimal_digits = static_cast<int>(bounded(value, key, 1, 1000));
    else if (key == "jobs") config.jobs = static_cast<unsigned>(bounded(value, key, 1, 256));
    else if (key == "cache_dir") {
      if (!value.is_string()) throw InputError("config key 'cache_dir' must be a string");
      config.cache_dir = value.get<std::string>();
    } else {
      throw InputError("unknown config key '" + key + "'");
    }
  }
  return config;
}

std::string fingerprint(const Config& config) {
  Json out = Json::object();
  out["precision_bits"] = config.ladder.initial_bits;
  out["max_escalations"] = config.ladder.max_escalations;
  out["max_q"] = config.max_q;
  out["max_g"] = config.max_g;
  out["extension_depth"] = config.extension_depth;
  out["decimal_digits"] = config.decimal_digits;
  return out.dump();
}

}  // namespace hodgesig::io
