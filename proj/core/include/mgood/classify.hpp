#pragma once

#include <string_view>

#include "mgood/partition.hpp"

namespace mgood {

enum class NClass { base, power, power_plus_one, mirror, mod0_reduction, mod1_reduction, open_case };

std::string_view to_string(NClass c);

// Structural class of n per the reduction case analysis. open_case means
// n = 3^t + 3k + 2 with 3^t + 1 < n < (3^{t+1} + 1)/2; the theorem's frontier
// starts at t >= 4 (smaller t were settled computationally).
struct Classification {
  i64 n = 0;
  NClass cls = NClass::base;
  i64 t = -1;  // power exponent, when meaningful
  i64 k = -1;  // band offset for mod0/mod1/open_case
  i64 s = -1;  // mirror power exponent
  bool within_theorem_frontier = false;
};

Classification classify(i64 n);

}  // namespace mgood
