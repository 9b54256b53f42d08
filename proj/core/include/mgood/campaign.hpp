#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>

#include "mgood/cache.hpp"
#include "mgood/classify.hpp"
#include "mgood/search.hpp"

namespace mgood {

enum class RecordStatus { exists, unique, multiple, none, budget_exceeded };
enum class Method { constructed, searched, cached, none };

std::string_view to_string(RecordStatus s);
std::string_view to_string(Method m);

struct CampaignRecord {
  i64 n = 0;
  Classification cls;
  RecordStatus status = RecordStatus::none;
  Method method = Method::none;
  std::optional<std::uint64_t> count;
  std::optional<i64> expected;  // embedded paper value, when one exists
  std::uint64_t nodes = 0;
  i64 ms = 0;
  std::string witness;
  bool contradiction = false;  // record disagrees with an embedded expectation
};

struct CampaignReport {
  std::string kind;  // existence | uniqueness | counts
  i64 m = 3;
  i64 lo = 0, hi = 0;
  std::string version = kToolkitVersion;
  int jobs = 1;
  std::vector<CampaignRecord> records;  // ascending n
  int contradictions = 0;
  std::string csv() const;
};

enum class Policy { construct_then_search, construct_only, search_only };

struct CampaignConfig {
  i64 m = 3;
  SearchBudget per_n_budget;  // defaults: 60 s / 1e8 nodes for existence probes
  int jobs = 1;
  ResultCache* cache = nullptr;
  Policy policy = Policy::construct_then_search;
  int max_part_size = 0;  // forwarded to the search engine
};

// existence sweep: constructor first, then search; every witness revalidates
CampaignReport verify_existence(i64 lo, i64 hi, const CampaignConfig& cfg = {});

// two-witness uniqueness probes over an explicit candidate list
CampaignReport verify_uniqueness(const std::vector<i64>& candidates,
                                 const CampaignConfig& cfg = {});

// exact counts with a diff against the embedded table
CampaignReport reproduce_counts(i64 lo, i64 hi, const CampaignConfig& cfg = {});

// #par(n) for n = 1..40, as published
const std::map<i64, i64>& paper_count_table();

// conjectured unique set N_u = {1,2,3,4} + {3^t-4, 3^t-2, 3^t-1, 3^t, 3^t+1,
// 3^t+2, 3^t+3, 3^t+5 : t >= 2}, ascending, restricted to <= max_n
std::vector<i64> conjectured_unique_set(i64 max_n);

}  // namespace mgood
