#include "dbc/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "algo_version.hpp"

namespace dbc {

namespace fs = std::filesystem;

ResultCache::ResultCache(fs::path dir, bool enabled)
    : dir_(std::move(dir)), enabled_(enabled) {
  if (enabled_) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) enabled_ = false;
  }
}

std::string ResultCache::default_dir() {
  if (const char* env = std::getenv("DBC_CACHE_DIR")) return env;
  return ".dbc-cache";
}

const char* ResultCache::version_tag() { return DBC_ALGO_VERSION; }

namespace {

std::string sanitize(const std::string& key) {
  std::string out;
  for (char ch : key)
    out += (std::isalnum((unsigned char)ch) || ch == '-' || ch == '_') ? ch
                                                                       : '_';
  return out;
}

}  // namespace

std::optional<std::string> ResultCache::get(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  fs::path f = dir_ / (sanitize(key) + "." + version_tag() + ".json");
  std::ifstream in(f);
  if (!in) return std::nullopt;
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  return content;
}

void ResultCache::put(const std::string& key, const std::string& value) const {
  if (!enabled_) return;
  fs::path f = dir_ / (sanitize(key) + "." + version_tag() + ".json");
  fs::path tmp = f;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << value;
  }
  std::error_code ec;
  fs::rename(tmp, f, ec);
}

}  // namespace dbc
