#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mgood/partition.hpp"

namespace mgood {

// base-3 digits, most significant first, no leading zeros
std::vector<int> ternary_digits(i64 x);
std::string ternary_string(i64 x);
bool digit2_free(i64 x);

// Evidence that k is 3-nice: an even-length interval [n_prime, n] with
// n = 3k+2 whose sum is digit-2-free in ternary and whose lowest ternary
// 1-digit is at least the minimum pair sum 2*n_prime + 1 of the window
// (the smallest regroup part must be reachable by some window pair).
struct NiceCertificate {
  i64 k = 0;
  i64 n = 0;        // 3k + 2
  i64 n_prime = 0;  // 1 <= n_prime < n
  i64 interval_sum = 0;
  std::string ternary;

  friend bool operator==(const NiceCertificate&, const NiceCertificate&) = default;
};

// all certificates for k, ascending n_prime; empty means k is not 3-nice
std::vector<NiceCertificate> nice_certificates(i64 k);

// all 3-nice k < limit with their certificates, ascending k
std::vector<std::pair<i64, std::vector<NiceCertificate>>> enumerate_nice(i64 limit);

enum class SequenceName { d, e, f };

// d: 1, 3, then d_{i+1} = 3(d_i - 1); e: 1, e_{i+1} = 3e_i - 1; f: -1, same
std::vector<i64> sequence(SequenceName name, int count);
std::vector<i64> sequence(char name, int count);

struct PatternCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PatternReport {
  i64 limit = 0;
  std::vector<i64> nice_ks;
  std::vector<i64> double_certificate_ks;
  std::vector<std::pair<i64, i64>> remarkable_pairs;  // (k, k+1) with n'(k) = n'(k+1) + 3
  std::vector<std::vector<i64>> blocks;               // pair starts, grouped by doubling
  std::vector<i64> outside_pattern;
  std::vector<PatternCheck> checks;
  std::string text() const;
};

// conjecture checks over enumerate_nice(limit); findings, never theorems
PatternReport pattern_report(i64 limit);

struct ExtensionRow {
  i64 a = 0;
  i64 b = 0;
  i64 k = 0;        // a + (3^b - 1)/2
  i64 n_prime = 0;  // window [n_prime, n] of length 6a + 2
  i64 n = 0;
  i64 sum = 0;      // = 3^{b+1} (3a + 1)
  std::string ternary;
  i64 min_t = 0;    // least t with 3^t + 3k + 2 inside the open band; = b + 2
  bool digit2free = false;
};

// regenerates the extension tables for 0 <= a <= a_max, b up to b_max
std::vector<ExtensionRow> extension_tables(i64 a_max, i64 b_max);

}  // namespace mgood
