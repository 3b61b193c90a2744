#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "core/cache.hpp"
#include "core/mult_map.hpp"
#include "core/report.hpp"
#include "core/rep_theory.hpp"

namespace apurity {

struct RunConfig {
  std::uint64_t seed = oracle::kDefaultSeed;
  std::uint64_t size_cap = oracle::kDefaultSizeCap;
  std::size_t exact_threshold = oracle::kDefaultExactThreshold;
  std::string cache_path;  // empty: no cache
};

enum class VerifySuite { small, full };

/// Command layer shared by the C API and the CLI. Every report records the seed;
/// identical configuration gives byte-identical JSON.
class Service {
 public:
  explicit Service(RunConfig config = {});

  const RunConfig& config() const { return config_; }
  void set_seed(std::uint64_t seed) { config_.seed = seed; }
  void set_size_cap(std::uint64_t cap);
  void set_exact_threshold(std::size_t threshold) { config_.exact_threshold = threshold; }
  void set_cache_path(const std::string& path);

  Report bott(int n, std::int64_t d) const;
  Report product(int n, std::int64_t a1, std::int64_t a2) const;
  Report decompose(int n, std::int64_t A, std::int64_t B) const;
  Report predict(int n, int k, std::int64_t A, std::int64_t B) const;
  /// `op` empty: the special-fiber operator for (n, k).
  Report oracle(const std::optional<oracle::ContractionOperator>& op, int n, int k, std::int64_t A,
                std::int64_t B) const;
  Report series_rep(int n, int k, std::int64_t a1, std::int64_t a2, rep::MRange range) const;
  Report series_oracle(const std::optional<oracle::ContractionOperator>& op, int n, int k, std::int64_t a1,
                       std::int64_t a2, rep::MRange range) const;
  Report asymptotics_special_fiber(int n, int k, std::int64_t a1, std::int64_t a2) const;
  Report asymptotics_product(int n, std::int64_t a1, std::int64_t a2) const;
  Report scan(int n, int k, rep::MRange a1_range, rep::MRange a2_range) const;
  Report verify(VerifySuite suite) const;

  /// Cached-or-computed results, as stored in the cache.
  nlohmann::json predict_value(int n, int k, std::int64_t A, std::int64_t B) const;
  nlohmann::json oracle_value(const oracle::ContractionOperator& op, std::int64_t A, std::int64_t B) const;

  static std::string predict_key(int n, int k, std::int64_t A, std::int64_t B);
  static std::string oracle_key(const oracle::ContractionOperator& op, std::int64_t A, std::int64_t B);
  /// Recomputes a cache record from its params, ignoring the cache.
  nlohmann::json recompute(const ResultCache::Record& record) const;

 private:
  oracle::OracleOptions oracle_options() const;
  nlohmann::ordered_json header(const char* command) const;
  nlohmann::json fresh_predict(int n, int k, std::int64_t A, std::int64_t B) const;
  nlohmann::json fresh_oracle(const oracle::ContractionOperator& op, std::int64_t A, std::int64_t B) const;

  RunConfig config_;
  std::shared_ptr<ResultCache> cache_;
};

}  // namespace apurity
