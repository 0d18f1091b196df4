#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace dbc {

// Disk cache for computed series, keyed by (kind, parameters, truncation,
// code version tag). Writes are atomic (temp file then rename); entries
// from a different build of the algorithm sources are ignored.
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, bool enabled = true);

  static std::string default_dir();

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value) const;

  bool enabled() const { return enabled_; }
  const std::filesystem::path& dir() const { return dir_; }
  static const char* version_tag();

 private:
  std::filesystem::path dir_;
  bool enabled_;
};

}  // namespace dbc
