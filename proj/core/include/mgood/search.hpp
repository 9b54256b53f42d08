#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "mgood/partition.hpp"

namespace mgood {

struct SearchBudget {
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
  std::optional<std::uint64_t> solution_limit;
};

enum class SearchStatus { exists, exhausted_none, budget_exceeded };
std::string_view to_string(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::exhausted_none;
  std::optional<std::uint64_t> count;  // present iff the space was exhausted
  std::vector<GoodPartition> witnesses;
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
  std::chrono::milliseconds elapsed{0};
  bool exhausted = false;
};

// anchored: branch on the largest unassigned element (the canonical
// decomposition order); fail_first: branch on the element with the fewest
// placements — same witness set, different traversal order, far better at
// existence probes on open-band instances
enum class SearchStrategy { anchored, fail_first };

struct SearchOptions {
  SearchBudget budget;
  SearchStrategy strategy = SearchStrategy::anchored;
  // how many witnesses to retain in the outcome (streaming callers use on_witness)
  std::uint64_t witness_cap = UINT64_MAX;
  // parts may have up to min(m, max_part_size) elements; 0 means min(m, 3),
  // the cap every construction in this toolkit uses
  int max_part_size = 0;
  // invoked per witness in deterministic order; return false to stop the search
  std::function<bool(const GoodPartition&)> on_witness;
};

// Depth-first search anchored on the largest unassigned element x: branch on
// the singleton (x) when x is a power of m, then pairs (y, x), then triples
// (y, z, x), each by ascending power then ascending partners. The anchoring
// makes every partition reachable exactly once, so witnesses need no dedup.
SearchOutcome enumerate_good(i64 n, i64 m, const SearchOptions& opts = {});

// enumerate with witnesses suppressed; count is exact when exhausted
SearchOutcome count_good(i64 n, i64 m, SearchBudget budget = {});

// stop at the first witness; existence probes branch fail-first
SearchOutcome exists_good(i64 n, i64 m, SearchBudget budget = {});

enum class UniquenessVerdict { unique, multiple, none, budget_exceeded };
std::string_view to_string(UniquenessVerdict v);

// two-witness search with early exit on the second
UniquenessVerdict is_unique(i64 n, i64 m = 3, SearchBudget budget = {},
                            SearchOutcome* detail = nullptr);

}  // namespace mgood
