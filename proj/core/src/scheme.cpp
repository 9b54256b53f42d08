#include "mgood/scheme.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mgood/construct.hpp"

namespace mgood {

Verdict validate_scheme(const OffsetScheme& s) {
  Verdict v;
  i64 len = s.window_hi - s.window_lo + 1;
  if (len < 2 || len % 2 != 0) {
    v.violations.push_back({"window", "window length must be positive and even"});
    return v;
  }
  std::set<i64> elems;
  std::vector<i64> sums;
  for (auto [a, b] : s.pairs) {
    if (a >= b) v.violations.push_back({"pair-order", "pair not ascending"});
    for (i64 e : {a, b}) {
      if (e < s.window_lo || e > s.window_hi) {
        v.violations.push_back({"pair-range", std::to_string(e) + " outside window"});
      } else if (!elems.insert(e).second) {
        v.violations.push_back({"pair-dup", std::to_string(e) + " paired twice"});
      }
    }
    sums.push_back(a + b);
  }
  if (static_cast<i64>(elems.size()) != len) {
    v.violations.push_back({"pair-cover", "pairs do not cover the window"});
  }
  std::vector<i64> sorted_sums = sums;
  std::sort(sorted_sums.begin(), sorted_sums.end());
  if (std::adjacent_find(sorted_sums.begin(), sorted_sums.end()) != sorted_sums.end()) {
    v.violations.push_back({"sum-distinct", "pair sums are not pairwise distinct"});
  }
  std::multiset<i64> remaining(sums.begin(), sums.end());
  for (const auto& g : s.regroups) {
    if (g.empty() || g.size() > 3) {
      v.violations.push_back({"regroup-size", "regroup size must be 1..3"});
      continue;
    }
    i64 total = 0;
    for (i64 x : g) {
      auto it = remaining.find(x);
      if (it == remaining.end()) {
        v.violations.push_back({"regroup-member", std::to_string(x) + " is not an unused pair sum"});
      } else {
        remaining.erase(it);
      }
      total += x;
    }
    if (!is_power_of(3, total)) {
      v.violations.push_back({"regroup-sum", std::to_string(total) + " is not a power of 3"});
    }
  }
  if (!remaining.empty()) {
    v.violations.push_back({"regroup-cover", "some pair sums are not regrouped"});
  }
  return v;
}

namespace {

struct Slot {
  i64 target;
  i64 partial = 0;
  int members = 0;
};

struct SchemeSolver {
  i64 lo, hi;
  std::vector<Slot> slots;  // targets descending
  std::vector<char> unpaired;
  std::set<i64> used_sums;
  std::vector<std::pair<i64, i64>> pairs;
  std::vector<int> pair_slot;
  std::uint64_t nodes = 0;
  std::uint64_t node_limit;
  i64 max_pair_sum;

  bool rec() {
    if (++nodes > node_limit) return false;
    i64 a = lo - 1;
    for (i64 x = lo; x <= hi; ++x) {
      if (unpaired[x - lo]) {
        a = x;
        break;
      }
    }
    if (a < lo) {
      for (const Slot& s : slots) {
        if (s.partial != s.target) return false;
      }
      return true;
    }
    unpaired[a - lo] = 0;
    for (i64 b = a + 1; b <= hi; ++b) {
      if (!unpaired[b - lo]) continue;
      i64 sum = a + b;
      if (used_sums.count(sum)) continue;
      unpaired[b - lo] = 0;
      used_sums.insert(sum);
      i64 prev_target = -1, prev_partial = -1;
      int prev_members = -1;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        Slot& s = slots[i];
        // skip slots identical to one already tried (symmetric targets)
        if (s.target == prev_target && s.partial == prev_partial && s.members == prev_members) {
          continue;
        }
        prev_target = s.target;
        prev_partial = s.partial;
        prev_members = s.members;
        if (s.members >= 3 || s.partial + sum > s.target) continue;
        i64 deficit = s.target - s.partial - sum;
        int room = 3 - s.members - 1;
        if (deficit != 0) {
          if (room == 0) continue;
          if (deficit < 2 * lo + 1 || deficit > static_cast<i64>(room) * max_pair_sum) continue;
        }
        s.partial += sum;
        ++s.members;
        pairs.push_back({a, b});
        pair_slot.push_back(static_cast<int>(i));
        if (rec()) return true;
        pairs.pop_back();
        pair_slot.pop_back();
        s.partial -= sum;
        --s.members;
        if (nodes > node_limit) break;
      }
      unpaired[b - lo] = 1;
      used_sums.erase(sum);
      if (nodes > node_limit) break;
    }
    unpaired[a - lo] = 1;
    return false;
  }
};

}  // namespace

std::optional<OffsetScheme> solve_offset_scheme(i64 k, i64 window_lo, i64 window_hi,
                                                std::vector<i64> targets,
                                                std::uint64_t node_limit) {
  i64 len = window_hi - window_lo + 1;
  if (len < 2 || len % 2 != 0) return std::nullopt;
  i64 window_sum = (window_lo + window_hi) * len / 2;
  i64 target_sum = 0;
  for (i64 t : targets) {
    if (!is_power_of(3, t)) return std::nullopt;
    target_sum += t;
  }
  if (window_sum != target_sum) return std::nullopt;
  i64 ell = len / 2;
  if (static_cast<i64>(targets.size()) > ell) return std::nullopt;
  if (static_cast<i64>(targets.size()) * 3 < ell) return std::nullopt;

  // slot-size feasibility: a target t needs between ceil(t / max_sum) and
  // floor(t / min_sum) pair sums (at most 3); duplicates of the same target
  // compete for sums, so at most one duplicate can use a single-sum slot
  {
    i64 min_sum = 2 * window_lo + 1;
    i64 max_sum = 2 * window_hi - 1;
    std::map<i64, i64> mult;
    for (i64 t : targets) ++mult[t];
    i64 total_min = 0, total_max = 0;
    for (auto [t, mu] : mult) {
      i64 smin = std::max<i64>(1, (t + max_sum - 1) / max_sum);
      i64 smax = std::min<i64>(3, t / min_sum);
      if (smin > smax) return std::nullopt;
      i64 dup_min = std::max<i64>(smin, 2);
      if (mu > 1 && dup_min > smax) return std::nullopt;
      total_min += smin + (mu - 1) * dup_min;
      total_max += mu * smax;
    }
    if (total_min > ell || total_max < ell) return std::nullopt;
  }

  SchemeSolver solver;
  solver.lo = window_lo;
  solver.hi = window_hi;
  solver.node_limit = node_limit;
  solver.max_pair_sum = 2 * window_hi - 1;
  std::sort(targets.rbegin(), targets.rend());
  for (i64 t : targets) solver.slots.push_back({t});
  solver.unpaired.assign(static_cast<std::size_t>(len), 1);

  if (!solver.rec()) return std::nullopt;

  OffsetScheme scheme;
  scheme.k = k;
  scheme.window_lo = window_lo;
  scheme.window_hi = window_hi;
  scheme.pairs = solver.pairs;
  scheme.regroups.resize(solver.slots.size());
  for (std::size_t i = 0; i < solver.pairs.size(); ++i) {
    auto [a, b] = solver.pairs[i];
    scheme.regroups[static_cast<std::size_t>(solver.pair_slot[i])].push_back(a + b);
  }
  std::erase_if(scheme.regroups, [](const std::vector<i64>& g) { return g.empty(); });
  for (auto& g : scheme.regroups) std::sort(g.begin(), g.end());
  return scheme;
}

std::optional<SchemeLift> scheme_to_partition(const OffsetScheme& s, i64 t, std::string* error) {
  auto fail = [&](const std::string& msg) -> std::optional<SchemeLift> {
    if (error) *error = msg;
    return std::nullopt;
  };
  Verdict sv = validate_scheme(s);
  if (!sv.ok()) return fail("invalid scheme: " + sv.summary());

  i64 p = 1;
  for (i64 i = 0; i < t; ++i) p *= 3;
  i64 n = p + s.window_hi;
  i64 base_n = p + s.window_lo - 1;

  // every pair sum must split a base pair (sum, 3^t - sum)
  std::vector<i64> sums;
  for (auto [a, b] : s.pairs) sums.push_back(a + b);
  for (i64 sum : sums) {
    if (sum * 2 >= 2 * p || p - sum < 1) {
      return fail("lift out of range: pair sum " + std::to_string(sum) + " too large for 3^" +
                  std::to_string(t));
    }
  }

  auto base = construct_3good(base_n);
  if (!base) return fail("no construction for base n = " + std::to_string(base_n));

  // removals (s, 3^t - s), deduplicated when s + s' == 3^t for two scheme sums
  std::vector<Part> removals;
  std::set<std::pair<i64, i64>> seen;
  for (i64 sum : sums) {
    std::pair<i64, i64> pr{std::min(sum, p - sum), std::max(sum, p - sum)};
    if (pr.first == pr.second) return fail("lift out of range: degenerate pair at 3^t/2");
    if (!seen.insert(pr).second) continue;
    removals.push_back(Part{{pr.first, pr.second}});
  }

  std::vector<Part> additions;
  for (const auto& g : s.regroups) {
    Part part{g};
    std::sort(part.elements.begin(), part.elements.end());
    // a regroup identical to a removed pair cancels: its elements anchor
    // triplets instead (the t=3, k=3 situation)
    if (part.elements.size() == 2 &&
        seen.count({part.elements[0], part.elements[1]}) &&
        part.elements[0] + part.elements[1] == p) {
      continue;
    }
    additions.push_back(std::move(part));
  }
  for (auto [a, b] : s.pairs) {
    additions.push_back(Part::of({p - (a + b), p + a, p + b}));
  }

  std::vector<Part> parts = base->partition.parts;
  for (const Part& rm : removals) {
    auto pos = std::find(parts.begin(), parts.end(), rm);
    if (pos == parts.end()) {
      return fail("base par(" + std::to_string(base_n) + ") lacks pair " + render_parts({rm}));
    }
    parts.erase(pos);
  }
  parts.insert(parts.end(), additions.begin(), additions.end());

  Verdict v;
  auto gp = canonicalize(std::move(parts), n, 3, &v);
  if (!gp) return fail("lift out of range: " + v.summary());

  SchemeLift lift;
  lift.partition = std::move(*gp);
  lift.step.rule = "offset_scheme";
  lift.step.n_from = n;
  lift.step.n_to = base_n;
  lift.step.added = std::move(additions);
  lift.step.removed = std::move(removals);
  return lift;
}

}  // namespace mgood
