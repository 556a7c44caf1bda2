#include "fatpoints/cache.hpp"

#include <fstream>
#include <iostream>

namespace fatpoints {

using nlohmann::json;

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // created on first write
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json row = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (row.is_discarded() || !row.is_object() || !row.contains("key") ||
        !row.contains("value")) {
      std::cerr << "warning: skipping corrupted cache line " << lineno << " in "
                << path_ << "\n";
      continue;
    }
    entries_[row["key"].dump()] = row["value"].dump();
  }
}

bool ResultCache::contains(const json& key) const {
  return entries_.count(key.dump()) > 0;
}

json ResultCache::get_or_compute(const json& key,
                                 const std::function<json()>& compute) {
  const std::string k = key.dump();
  auto it = entries_.find(k);
  if (it != entries_.end()) return json::parse(it->second);
  json value = compute();
  entries_[k] = value.dump();
  std::ofstream out(path_, std::ios::app);
  if (out) {
    out << json{{"key", key}, {"value", value}}.dump() << "\n";
  } else {
    std::cerr << "warning: cache file " << path_ << " is not writable\n";
  }
  return value;
}

std::string ResultCache::point_set_digest(const json& points) {
  // FNV-1a over the canonical dump; collisions are harmless for a cache
  const std::string s = points.dump();
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace fatpoints
