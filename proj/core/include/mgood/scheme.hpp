#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "mgood/partition.hpp"
#include "mgood/trace.hpp"

namespace mgood {

// A pairing of the window [window_lo, window_hi] (offsets relative to 3^t)
// into pairs with pairwise distinct sums, together with a regrouping of those
// sums into sets of size <= 3, each summing to a power of 3. Lifting such a
// scheme produces par(3^t + window_hi) from par(3^t + window_lo - 1).
struct OffsetScheme {
  i64 k = 0;
  i64 window_lo = 0;
  i64 window_hi = 0;
  std::vector<std::pair<i64, i64>> pairs;
  std::vector<std::vector<i64>> regroups;
};

Verdict validate_scheme(const OffsetScheme& s);

// first solution under ascending branch order; targets is the multiset of
// powers of 3 the regroups must hit exactly; nullopt when exhausted, the
// preconditions fail, or the node budget runs out
std::optional<OffsetScheme> solve_offset_scheme(i64 k, i64 window_lo, i64 window_hi,
                                                std::vector<i64> targets,
                                                std::uint64_t node_limit = 20'000'000);

struct SchemeLift {
  GoodPartition partition;
  ReductionStep step;  // rule "offset_scheme", from 3^t + window_hi to 3^t + window_lo - 1
};

// lifts the scheme around 3^t: removes each base pair (s, 3^t - s), adds the
// regroup parts and the zero-sum triplets (3^t - (u+v), 3^t + u, 3^t + v);
// error reports "lift out of range" style failures
std::optional<SchemeLift> scheme_to_partition(const OffsetScheme& s, i64 t,
                                              std::string* error = nullptr);

}  // namespace mgood
