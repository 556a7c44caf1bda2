#pragma once

#include <functional>
#include <map>
#include <string>

#include <json.hpp>

namespace fatpoints {

/// Append-only JSON-lines result cache keyed by a canonical key object
/// (method, inputs, seed). Hits replay the stored value byte-for-byte;
/// corrupted lines are skipped with a warning.
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  nlohmann::json get_or_compute(const nlohmann::json& key,
                                const std::function<nlohmann::json()>& compute);

  bool contains(const nlohmann::json& key) const;
  size_t size() const { return entries_.size(); }
  const std::string& path() const { return path_; }

  /// Stable content key for a point set, for use inside cache keys.
  static std::string point_set_digest(const nlohmann::json& points);

 private:
  std::string path_;
  std::map<std::string, std::string> entries_;  // key dump -> value dump
};

}  // namespace fatpoints
