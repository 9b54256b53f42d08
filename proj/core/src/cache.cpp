#include "mgood/cache.hpp"

#include <fstream>
#include <iostream>

#include <json.hpp>

namespace mgood {

namespace {

using nlohmann::json;

std::optional<CacheRecord> from_line(const std::string& line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  try {
    CacheRecord rec;
    rec.version = j.at("v").get<std::string>();
    rec.m = j.at("m").get<i64>();
    rec.n = j.at("n").get<i64>();
    rec.question = j.at("q").get<std::string>();
    rec.status = j.at("status").get<std::string>();
    if (j.contains("count")) rec.count = j["count"].get<std::uint64_t>();
    rec.nodes = j.value("nodes", std::uint64_t{0});
    rec.ms = j.value("ms", i64{0});
    rec.witness = j.value("witness", std::string{});
    return rec;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

std::string to_line(const CacheRecord& rec) {
  json j;
  j["v"] = rec.version;
  j["m"] = rec.m;
  j["n"] = rec.n;
  j["q"] = rec.question;
  j["status"] = rec.status;
  if (rec.count) j["count"] = *rec.count;
  j["nodes"] = rec.nodes;
  j["ms"] = rec.ms;
  if (!rec.witness.empty()) j["witness"] = rec.witness;
  return j.dump();
}

}  // namespace

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto rec = from_line(line);
    if (!rec) {
      ++dropped_;
      std::cerr << "cache: dropping unreadable record in " << path_ << "\n";
      continue;
    }
    if (rec->version != kToolkitVersion) {
      ++dropped_;
      continue;
    }
    records_[{rec->m, rec->n, rec->question}] = std::move(*rec);
  }
}

const CacheRecord* ResultCache::lookup(i64 m, i64 n, std::string_view question) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = records_.find({m, n, std::string(question)});
  return it == records_.end() ? nullptr : &it->second;
}

void ResultCache::append(const CacheRecord& rec) {
  std::lock_guard<std::mutex> lock(mu_);
  records_[{rec.m, rec.n, rec.question}] = rec;
  std::ofstream out(path_, std::ios::app);
  out << to_line(rec) << "\n";
}

}  // namespace mgood
