#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgood/partition.hpp"

namespace mgood {

// One reduction: par(n_from) is obtained from par(n_to) by removing the
// `removed` parts and adding the `added` parts.
struct ReductionStep {
  std::string rule;  // base | power | power_plus_one | mirror | mod0 | mod1 | pair_split | offset_scheme
  i64 n_from = 0;
  i64 n_to = 0;
  std::vector<Part> added;
  std::vector<Part> removed;
};

struct ReductionTrace {
  i64 n = 0;
  std::vector<ReductionStep> steps;  // ordered from n down to the terminal
  std::string terminal;              // "empty" or "base:<n>"
};

// rebuilds the partition from the terminal base case upward; every removed
// part must be present at its step, and the result must validate
std::optional<GoodPartition> replay(const ReductionTrace& trace, i64 m, std::string* error = nullptr);

}  // namespace mgood
