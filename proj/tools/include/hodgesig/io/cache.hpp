#pragma once

// On-disk result cache. A document is stored under a key derived from the
// command, the canonical payload text and the artifact version, and a hit
// returns the stored bytes unchanged.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace hodgesig::io {

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  std::string key(std::string_view command, std::string_view canonical_payload) const;
  std::optional<std::string> load(const std::string& key) const;
  /// Written to a temporary file and renamed into place.
  void store(const std::string& key, const std::string& document) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace hodgesig::io
