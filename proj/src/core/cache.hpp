#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace apurity {

/// Append-only JSON-lines store of exact results. Each line is
/// {"version": ..., "key": ..., "params": {...}, "value": {...}}; `params` is enough to
/// recompute `value`. Later lines override earlier ones with the same key.
class ResultCache {
 public:
  static constexpr const char* kVersion = "apurity-cache-1";

  struct Record {
    std::string key;
    nlohmann::json params;
    nlohmann::json value;
  };

  /// Loads the file if it exists; a missing file is an empty cache.
  explicit ResultCache(std::string path);

  const std::string& path() const { return path_; }
  std::optional<nlohmann::json> lookup(const std::string& key) const;
  void store(const std::string& key, const nlohmann::json& params, const nlohmann::json& value);
  std::vector<Record> records() const;

 private:
  std::string path_;
  mutable std::mutex mutex_;
  std::map<std::string, Record> records_;
};

}  // namespace apurity
