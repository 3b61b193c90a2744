#include "core/cache.hpp"

#include <fstream>

#include "core/error.hpp"

namespace apurity {

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      fail(ErrorKind::Io, "cache " + path_ + ": line " + std::to_string(line_no) + " is not JSON");
    }
    if (!rec.is_object() || !rec.contains("key") || !rec.contains("value") || !rec["key"].is_string()) {
      fail(ErrorKind::Io, "cache " + path_ + ": line " + std::to_string(line_no) + " is not a cache record");
    }
    // Records written by another format version are ignored.
    if (rec.value("version", "") != kVersion) continue;
    const std::string key = rec["key"];
    records_[key] = Record{key, rec.value("params", nlohmann::json::object()), rec["value"]};
  }
}

std::optional<nlohmann::json> ResultCache::lookup(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = records_.find(key);
  if (it == records_.end()) return std::nullopt;
  return it->second.value;
}

void ResultCache::store(const std::string& key, const nlohmann::json& params, const nlohmann::json& value) {
  std::lock_guard lock(mutex_);
  if (records_.count(key)) return;
  std::ofstream out(path_, std::ios::app);
  if (!out) fail(ErrorKind::Io, "cannot append to cache " + path_);
  nlohmann::json rec;
  rec["version"] = kVersion;
  rec["key"] = key;
  rec["params"] = params;
  rec["value"] = value;
  out << rec.dump() << '\n';
  records_[key] = Record{key, params, value};
}

std::vector<ResultCache::Record> ResultCache::records() const {
  std::lock_guard lock(mutex_);
  std::vector<Record> out;
  for (const auto& [key, rec] : records_) out.push_back(rec);
  return out;
}

}  // namespace apurity
