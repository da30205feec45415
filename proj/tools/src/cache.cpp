#include "hodgesig/io/cache.hpp"

#include "hodgesig/io/documents.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <thread>

namespace hodgesig::io {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, hash >>= 4) out[static_cast<std::size_t>(i)] = kDigits[hash & 0xf];
  return out;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw InputError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::string ResultCache::key(std::string_view command, std::string_view canonical_payload) const {
  std::string material;
  material.append(command).append("\n").append(kArtifactVersion).append("\n").append(canonical_payload);
  return std::string(command) + "-" + fnv1a_hex(material);
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
  std::ifstream in(dir_ / (key + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void ResultCache::store(const std::string& key, const std::string& document) const {
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id();
  std::filesystem::path target = dir_ / (key + ".json");
  std::filesystem::path tmp = dir_ / (key + suffix.str());
  {
    std::ofstream out(tmp, std::ios::binary);
    out << document;
    if (!out) throw InputError("cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace hodgesig::io
