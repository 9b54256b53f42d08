#pragma once

#include <optional>

#include "mgood/partition.hpp"
#include "mgood/trace.hpp"

namespace mgood {

struct Constructed {
  GoodPartition partition;
  ReductionTrace trace;
};

// the unique 2-good partition of [n]; total for n >= 1
Constructed construct_2good(i64 n);

// 3-good construction pipeline with fixed rule precedence:
// base table (n <= 13) -> exact power -> power+1 -> mirror -> mod-0 -> mod-1
// -> open case. Returns nullopt only for open-case n with no known reduction.
std::optional<Constructed> construct_3good(i64 n);

// oracle-verified canonical-least partitions for 1 <= n <= 13
const GoodPartition& base_partition_3(i64 n);

// named constructions for n = 3^t + 3k + 2 inside the open band
// 3^t + 1 < n < (3^{t+1} + 1)/2; nullopt when no family or certificate applies
std::optional<Constructed> open_case_construct(i64 t, i64 k);

// zero-sum triple decomposition of the symmetric interval [-radius, radius];
// a lone (0) part appears when radius % 3 == 0; none when radius % 3 == 2
struct SymmetricPartition {
  i64 radius = 0;
  std::vector<std::vector<i64>> parts;
};

std::optional<SymmetricPartition> symmetric_partition(i64 radius);
Verdict validate_symmetric(const SymmetricPartition& sp);
std::string render_symmetric(const SymmetricPartition& sp);

}  // namespace mgood
