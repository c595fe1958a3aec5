#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bnls/errors.hpp"

namespace bnls {

// Flat key-value configuration with [section] headers:
//
//   # comment
//   [grid]
//   n = 128
//   box_length = 18.849555921538759
//
// Keys flatten to "section.key" ("key" when no section is open). The digest
// is FNV-1a 64 over the canonical serialization (sorted "k=v" lines), so it
// is stable under key reordering in the file.
class KeyValueConfig {
 public:
  KeyValueConfig() = default;

  static KeyValueConfig parse_file(const std::string& path);
  static KeyValueConfig parse_text(const std::string& text);

  bool has(const std::string& key) const { return kv_.count(key) > 0; }
  void set(const std::string& key, const std::string& value) { kv_[key] = value; }

  std::string get(const std::string& key, const std::string& fallback) const;
  std::string require(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_list(const std::string& key,
                               const std::vector<double>& fallback) const;

  std::string canonical() const;
  std::string digest() const;  // 16 hex digits

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace bnls
