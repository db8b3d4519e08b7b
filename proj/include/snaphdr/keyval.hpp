#pragma once

#include <map>
#include <string>

namespace snaphdr {

/// Flat key=value configuration with [section] grouping. Keys are stored as
/// "section.key" ("" section keeps the bare key). '#' starts a comment;
/// surrounding whitespace is trimmed.
class KeyVal {
 public:
  KeyVal() = default;

  static KeyVal parse(const std::string& text);
  static KeyVal load(const std::string& path);

  std::string serialize() const;

  bool has(const std::string& key) const { return kv_.count(key) != 0; }
  std::string get(const std::string& key, const std::string& fallback = "") const;
  double get_double(const std::string& key, double fallback) const;
  long get_int(const std::string& key, long fallback) const;
  void set(const std::string& key, const std::string& value) { kv_[key] = value; }

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace snaphdr
