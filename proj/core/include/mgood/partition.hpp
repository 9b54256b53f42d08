#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Domain types for m-good partitions of [n] = {1,...,n}: every part has at
// most m elements and sums to a power of m. All arithmetic is exact 64-bit.

namespace mgood {

using i64 = std::int64_t;

inline constexpr i64 kMaxN = i64{1} << 31;
inline constexpr char kToolkitVersion[] = "0.1.0";

constexpr i64 triangular(i64 n) { return n * (n + 1) / 2; }

// exponent e with x == m^e, by repeated exact division; nullopt otherwise
std::optional<int> is_power_of(i64 m, i64 x);

// least power of m that is >= x (x >= 1)
i64 power_at_least(i64 m, i64 x);

struct Part {
  std::vector<i64> elements;  // strictly increasing positive integers

  i64 sum() const;
  i64 min() const { return elements.front(); }
  static Part of(std::initializer_list<i64> es);

  friend auto operator<=>(const Part&, const Part&) = default;
};

struct GoodPartition {
  i64 n = 0;
  i64 m = 3;
  std::vector<Part> parts;  // canonical order: sorted by minimum element

  friend bool operator==(const GoodPartition&, const GoodPartition&) = default;
};

struct Instance {
  i64 n;
  i64 m;
  Instance(i64 n, i64 m);  // requires 1 <= n < 2^31 and m >= 2
};

struct TripletSet {
  i64 n = 0;
  std::vector<Part> triplets;  // |elements| == 3 each, pairwise disjoint
};

struct Violation {
  std::string rule;
  std::string detail;
};

struct Verdict {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// checks every GoodPartition invariant; violations are data, not failures
Verdict validate(const GoodPartition& p);

// sorts elements within parts and parts by minimum element, then validates;
// idempotent on canonical input
std::optional<GoodPartition> canonicalize(std::vector<Part> parts, i64 n, i64 m,
                                          Verdict* verdict = nullptr);

// canonical text notation, e.g. "(1+2)+(3+6)+(4+5)" (ASCII, no spaces)
std::string render(const GoodPartition& p);
std::string render_parts(const std::vector<Part>& parts);

struct ParseResult {
  std::optional<GoodPartition> partition;
  std::optional<std::size_t> syntax_error_offset;
  std::string error;  // set on syntax or validation failure
  Verdict verdict;    // validation outcome when syntax was fine
  bool ok() const { return partition.has_value(); }
};

// grammar: partition := clause ('+' clause)*; clause := '(' int ('+' int)* ')'
// whitespace is allowed between tokens; input may be non-canonical and is
// canonicalized before validation
ParseResult parse(std::string_view text, i64 n, i64 m);

struct RestoreResult {
  std::optional<GoodPartition> partition;
  std::string failure;  // reason when no 3-good partition has this triplet set
  bool ok() const { return partition.has_value(); }
};

// rebuilds the unique 3-good partition of [ts.n] containing exactly these
// triplets: repeatedly take the largest uncovered x; emit (x) when x is a
// power of 3, else pair it with 3^t - x for the least power 3^t > x
RestoreResult restore_from_triplets(const TripletSet& ts);

struct ResidueReport {
  i64 n = 0;
  i64 m = 0;
  i64 triangular_mod_m = 0;
  bool obstruction = false;  // m > 3 and n = 2(mt+1): no m-good partition
  std::optional<i64> t;      // the t above, when flagged
};

ResidueReport residue_checks(i64 n, i64 m);

}  // namespace mgood
