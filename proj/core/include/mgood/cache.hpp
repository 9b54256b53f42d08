#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "mgood/partition.hpp"

namespace mgood {

// One line of the append-only result log, keyed by (m, n, question).
// Records from other toolkit versions are ignored on load.
struct CacheRecord {
  std::string version = kToolkitVersion;
  i64 m = 3;
  i64 n = 0;
  std::string question;  // exists | count | unique
  std::string status;
  std::optional<std::uint64_t> count;
  std::uint64_t nodes = 0;
  i64 ms = 0;
  std::string witness;  // canonical text, when one was found
};

class ResultCache {
 public:
  // loads an existing log; a torn trailing record is dropped with a warning
  explicit ResultCache(std::string path);

  const CacheRecord* lookup(i64 m, i64 n, std::string_view question) const;
  void append(const CacheRecord& rec);

  std::size_t size() const { return records_.size(); }
  int dropped_lines() const { return dropped_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::map<std::tuple<i64, i64, std::string>, CacheRecord> records_;
  mutable std::mutex mu_;
  int dropped_ = 0;
};

}  // namespace mgood
