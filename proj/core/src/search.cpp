#include "mgood/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <string_view>

namespace mgood {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::exists: return "exists";
    case SearchStatus::exhausted_none: return "exhausted-none";
    case SearchStatus::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

std::string_view to_string(UniquenessVerdict v) {
  switch (v) {
    case UniquenessVerdict::unique: return "unique";
    case UniquenessVerdict::multiple: return "multiple";
    case UniquenessVerdict::none: return "none";
    case UniquenessVerdict::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

using u64 = std::uint64_t;

constexpr int kMaxPart = 8;  // engine limit on part size (m <= 8 searched exhaustively)

// set of elements 1..n backed by 64-bit words
class ElementSet {
 public:
  explicit ElementSet(i64 n) : words_((static_cast<std::size_t>(n) >> 6) + 1, 0) {
    for (i64 x = 1; x <= n; ++x) set(x);
  }
  bool test(i64 x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void set(i64 x) { words_[x >> 6] |= u64{1} << (x & 63); }
  void clear(i64 x) { words_[x >> 6] &= ~(u64{1} << (x & 63)); }

  i64 highest() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
      if (words_[w]) return static_cast<i64>((w << 6) + 63 - std::countl_zero(words_[w]));
    }
    return 0;
  }
  i64 lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w]) return static_cast<i64>((w << 6) + std::countr_zero(words_[w]));
    }
    return 0;
  }
  // three largest members, 0-padded
  std::array<i64, 3> top_three() const {
    std::array<i64, 3> out{0, 0, 0};
    int got = 0;
    for (std::size_t w = words_.size(); w-- > 0 && got < 3;) {
      u64 word = words_[w];
      while (word && got < 3) {
        int b = 63 - std::countl_zero(word);
        out[got++] = static_cast<i64>((w << 6) + b);
        word &= ~(u64{1} << b);
      }
    }
    return out;
  }

  // smallest member >= x, or 0
  i64 next(i64 x) const {
    std::size_t w = static_cast<std::size_t>(x) >> 6;
    if (w >= words_.size()) return 0;
    u64 word = words_[w] & (~u64{0} << (x & 63));
    while (true) {
      if (word) return static_cast<i64>((w << 6) + std::countr_zero(word));
      if (++w >= words_.size()) return 0;
      word = words_[w];
    }
  }

  // largest member <= x, or 0
  i64 prev(i64 x) const {
    if (x < 0) return 0;
    std::size_t w = static_cast<std::size_t>(x) >> 6;
    if (w >= words_.size()) {
      w = words_.size() - 1;
      x = static_cast<i64>((w << 6) + 63);
    }
    u64 word = words_[w] & (~u64{0} >> (63 - (x & 63)));
    while (true) {
      if (word) return static_cast<i64>((w << 6) + 63 - std::countl_zero(word));
      if (w == 0) return 0;
      word = words_[--w];
    }
  }

  // count and sum of members strictly above `bound`
  std::pair<i64, i64> count_sum_above(i64 bound) const {
    i64 cnt = 0, sum = 0;
    std::size_t w0 = static_cast<std::size_t>(bound + 1) >> 6;
    for (std::size_t w = w0; w < words_.size(); ++w) {
      u64 word = words_[w];
      if (w == w0) word &= ~u64{0} << ((bound + 1) & 63);
      while (word) {
        int b = std::countr_zero(word);
        word &= word - 1;
        ++cnt;
        sum += static_cast<i64>((w << 6) + b);
      }
    }
    return {cnt, sum};
  }

 private:
  std::vector<u64> words_;
};

// frame: [0] = part size, [1..size] = elements ascending
using Frame = std::array<i64, kMaxPart + 1>;

struct Engine {
  i64 n;
  i64 m;
  int cap;
  const SearchOptions& opts;
  ElementSet free;
  std::vector<i64> powers;  // ascending, up to cap * n
  std::vector<Frame> stack;
  SearchOutcome out;
  std::chrono::steady_clock::time_point start;
  bool stop = false;
  bool budget_hit = false;
  bool need_witnesses;

  Engine(i64 n_, i64 m_, const SearchOptions& o)
      : n(n_),
        m(m_),
        cap(static_cast<int>(std::min<i64>(
            m_, o.max_part_size > 0 ? std::min<i64>(o.max_part_size, kMaxPart) : 3))),
        opts(o),
        free(n_) {
    for (i64 p = 1; p <= cap * n; p *= m) powers.push_back(p);
    start = std::chrono::steady_clock::now();
    need_witnesses = opts.witness_cap > 0 || static_cast<bool>(opts.on_witness);
    stack.reserve(static_cast<std::size_t>(n));
    remaining_sum = triangular(n);
    if (const char* env = ::getenv("MGOOD_TRIPLE_ORDER")) {
      balanced_first = std::string_view(env) != "ascending";
    }
    fail_first = opts.strategy == SearchStrategy::fail_first;
  }

  bool over_budget() {
    if (opts.budget.node_limit && out.nodes > *opts.budget.node_limit) return true;
    if (opts.budget.time_limit && (out.nodes & 0xFFF) == 0) {
      auto elapsed = std::chrono::steady_clock::now() - start;
      if (elapsed > *opts.budget.time_limit) return true;
    }
    return false;
  }

  void emit() {
    ++out.solutions;
    if (need_witnesses) {
      std::vector<Part> parts;
      parts.reserve(stack.size());
      for (const Frame& f : stack) {
        Part p;
        p.elements.assign(f.begin() + 1, f.begin() + 1 + f[0]);
        parts.push_back(std::move(p));
      }
      std::sort(parts.begin(), parts.end(),
                [](const Part& a, const Part& b) { return a.elements < b.elements; });
      GoodPartition gp{n, m, std::move(parts)};
      if (out.witnesses.size() < opts.witness_cap) out.witnesses.push_back(gp);
      if (opts.on_witness && !opts.on_witness(gp)) stop = true;
    }
    if (opts.budget.solution_limit && out.solutions >= *opts.budget.solution_limit) stop = true;
  }

  // placements of v over the free elements (as a member, not necessarily the
  // part's largest): singleton, pair {v, w} or triple {v, y, z}. Counts up to
  // `limit` and records the first; a cap above 3 reports "many" (unforced).
  int placements_up_to(i64 v, i64 reach, int limit, std::array<i64, 3>& part) const {
    int found = 0;
    for (i64 p : powers) {
      if (p < v) continue;
      if (p > reach) break;
      if (cap >= 4) return limit;
      if (p == v) {
        if (found++ == 0) part = {v, 0, 0};
        if (found == limit) return found;
      }
      i64 d = p - v;
      if (cap >= 2 && d != v && d >= 1 && d <= n && free.test(d)) {
        if (found++ == 0) part = {std::min(v, d), std::max(v, d), 0};
        if (found == limit) return found;
      }
      if (cap >= 3) {
        i64 ylo = std::max<i64>(1, d - n);
        for (i64 y = free.next(ylo); y != 0 && 2 * y < d; y = free.next(y + 1)) {
          if (y == v) continue;
          i64 z = d - y;
          if (z == v || !free.test(z)) continue;
          if (found++ == 0) {
            part = {v, y, z};
            std::sort(part.begin(), part.end());
          }
          if (found == limit) return found;
        }
      }
    }
    return found;
  }

  // admissible propagation sweep: an element with no placement kills the
  // state (-1); an element with exactly one placement forces that part (+1).
  // Otherwise 0; in fail-first mode `pick` is set to the element with the
  // fewest placements, the classic first-fail branching choice.
  int propagate(std::array<i64, 3>& forced, i64* pick) {
    auto top = free.top_three();
    int best_cnt = 1 << 20;
    i64 best_v = 0;
    int limit = pick ? 3 : 2;
    for (i64 v = free.lowest(); v != 0; v = free.next(v + 1)) {
      i64 reach = v;
      int partners = 0;
      for (i64 w : top) {
        if (partners >= cap - 1) break;
        if (w != 0 && w != v) {
          reach += w;
          ++partners;
        }
      }
      std::array<i64, 3> part{};
      int cnt = placements_up_to(v, reach, limit, part);
      if (cnt == 0) return -1;
      if (cnt == 1) {
        forced = part;
        return 1;
      }
      if (pick && cnt < best_cnt) {
        best_cnt = cnt;
        best_v = v;
      }
    }
    if (pick) *pick = best_v;
    return 0;
  }

  // admissible band prune: every free element above P/cap (P = least power of
  // m at or above the largest free element) can only sit in a P-part. With T
  // such parts, T >= |band|/cap and T >= sum(band)/P; their complements must
  // come from the low elements, so T*P <= remaining sum and the complement
  // T*P - sum(band) must fit in (cap*T - |band|) low slots of value <= maxlow.
  // Both bounds tighten as T grows, so checking the minimal T suffices.
  bool band_feasible() const {
    i64 x = free.highest();
    if (x == 0) return true;
    i64 p = 1;
    while (p < x) p *= m;
    i64 low_limit = p / cap;
    auto [bcnt, bsum] = free.count_sum_above(low_limit);
    if (bcnt == 0) return true;
    i64 tmin = std::max((bcnt + cap - 1) / cap, (bsum + p - 1) / p);
    i64 remaining = remaining_sum;
    if (tmin * p > remaining) return false;
    i64 complement = tmin * p - bsum;
    i64 slots = static_cast<i64>(cap) * tmin - bcnt;
    i64 maxlow = free.prev(low_limit);
    return complement <= slots * maxlow;
  }

  i64 remaining_sum = 0;
  bool balanced_first = true;
  bool fail_first = false;

  // branch over every part containing v (v need not be the part's largest):
  // powers ascending; per power the pair, then triples balanced-first
  void branch_on(i64 v) {
    take(v);
    if (std::binary_search(powers.begin(), powers.end(), v)) {
      stack.push_back(Frame{1, v});
      dfs();
      stack.pop_back();
    }
    for (i64 p : powers) {
      if (stop) break;
      if (p <= v) continue;
      i64 d = p - v;
      if (d >= 1 && d <= n && d != v && free.test(d)) {
        take(d);
        stack.push_back(Frame{2, std::min(v, d), std::max(v, d)});
        dfs();
        stack.pop_back();
        give(d);
      }
      if (cap >= 3 && d >= 3) {
        i64 ylo = std::max<i64>(1, d - n);
        i64 yhi = (d - 1) / 2;
        for (i64 step = 0; step <= yhi - ylo && !stop; ++step) {
          i64 y = balanced_first ? yhi - step : ylo + step;
          i64 z = d - y;
          if (y == v || z == v) continue;
          if (!free.test(y) || !free.test(z)) continue;
          take(y);
          take(z);
          Frame f{3, v, y, z};
          std::sort(f.begin() + 1, f.begin() + 4);
          stack.push_back(f);
          dfs();
          stack.pop_back();
          give(y);
          give(z);
        }
      }
    }
    give(v);
  }

  void take(i64 e) {
    free.clear(e);
    remaining_sum -= e;
  }
  void give(i64 e) {
    free.set(e);
    remaining_sum += e;
  }

  // partner sets of exactly `want` free elements below `max_elem` and above
  // chosen.back(), summing to `need`; ascending lexicographic order
  void partner_sets(i64 need, int want, i64 max_elem, std::vector<i64>& chosen) {
    if (stop) return;
    if (want == 1) {
      i64 lo = chosen.empty() ? 1 : chosen.back() + 1;
      if (need >= lo && need < max_elem && free.test(need)) {
        take(need);
        chosen.push_back(need);
        push_and_descend(chosen);
        chosen.pop_back();
        give(need);
      }
      return;
    }
    i64 lo = chosen.empty() ? 1 : chosen.back() + 1;
    for (i64 y = lo; y < max_elem && !stop; ++y) {
      // bounds for the remaining want-1 strictly increasing values
      i64 rest = need - y;
      i64 min_rest = 0, max_rest = 0;
      for (int i = 1; i < want; ++i) {
        min_rest += y + i;
        max_rest += max_elem - i;
      }
      if (rest > max_rest) continue;
      if (rest < min_rest) break;
      if (!free.test(y)) continue;
      take(y);
      chosen.push_back(y);
      partner_sets(rest, want - 1, max_elem, chosen);
      chosen.pop_back();
      give(y);
    }
  }

  void push_and_descend(const std::vector<i64>& partners) {
    Frame f{};
    f[0] = static_cast<i64>(partners.size()) + 1;
    for (std::size_t i = 0; i < partners.size(); ++i) f[1 + i] = partners[i];
    f[partners.size() + 1] = anchor_;
    stack.push_back(f);
    dfs();
    stack.pop_back();
  }

  i64 anchor_ = 0;

  void dfs() {
    if (stop) return;
    ++out.nodes;
    if (over_budget()) {
      budget_hit = true;
      stop = true;
      return;
    }
    i64 x = free.highest();
    if (x == 0) {
      emit();
      return;
    }
    if (!band_feasible()) return;
    std::array<i64, 3> forced{};
    i64 pick = 0;
    int verdict = propagate(forced, fail_first && cap <= 3 ? &pick : nullptr);
    if (verdict < 0) return;
    if (verdict == 1) {
      int size = forced[2] ? 3 : (forced[1] ? 2 : 1);
      for (int i = 0; i < size; ++i) take(forced[static_cast<std::size_t>(i)]);
      stack.push_back(Frame{size, forced[0], forced[1], forced[2]});
      dfs();
      stack.pop_back();
      for (int i = 0; i < size; ++i) give(forced[static_cast<std::size_t>(i)]);
      return;
    }
    if (fail_first && cap <= 3 && pick != 0 && pick != x) {
      branch_on(pick);
      return;
    }

    i64 saved_anchor = anchor_;
    anchor_ = x;
    take(x);
    // singleton
    if (std::binary_search(powers.begin(), powers.end(), x)) {
      stack.push_back(Frame{1, x});
      dfs();
      stack.pop_back();
    }
    // pairs: ascending power, partner forced
    if (cap >= 2) {
      for (i64 p : powers) {
        if (stop) break;
        if (p <= x) continue;
        i64 y = p - x;
        if (y >= x) break;
        if (!free.test(y)) continue;
        take(y);
        stack.push_back(Frame{2, y, x});
        dfs();
        stack.pop_back();
        give(y);
      }
    }
    // triples: ascending power, then balanced partners first (descending y);
    // grabbing the smallest elements for the largest triples strands them,
    // so the near-equal split leads and the skewed splits follow
    if (cap >= 3) {
      for (i64 p : powers) {
        if (stop) break;
        i64 d = p - x;
        if (d < 3) continue;
        if (d > 2 * x - 3) break;
        i64 ylo = std::max<i64>(1, d - (x - 1));
        i64 yhi = (d - 1) / 2;
        for (i64 step = 0; step <= yhi - ylo && !stop; ++step) {
          i64 y = balanced_first ? yhi - step : ylo + step;
          i64 z = d - y;
          if (z >= x) continue;
          if (!free.test(y) || !free.test(z)) continue;
          take(y);
          take(z);
          stack.push_back(Frame{3, y, z, x});
          dfs();
          stack.pop_back();
          give(y);
          give(z);
        }
      }
    }
    // sizes 4..cap (m >= 4): general partner enumeration
    if (cap >= 4) {
      std::vector<i64> chosen;
      for (int size = 4; size <= cap && !stop; ++size) {
        for (i64 p : powers) {
          if (stop) break;
          i64 d = p - x;
          i64 min_d = 0, max_d = 0;
          for (int i = 1; i < size; ++i) {
            min_d += i;
            max_d += x - i;
          }
          if (d < min_d || d > max_d) continue;
          partner_sets(d, size - 1, x, chosen);
        }
      }
    }
    give(x);
    anchor_ = saved_anchor;
  }
};

}  // namespace

SearchOutcome enumerate_good(i64 n, i64 m, const SearchOptions& opts) {
  Instance check(n, m);
  (void)check;
  Engine eng(n, m, opts);
  eng.dfs();
  SearchOutcome out = std::move(eng.out);
  out.exhausted = !eng.stop;
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - eng.start);
  if (out.exhausted) out.count = out.solutions;
  out.status = eng.budget_hit
                   ? SearchStatus::budget_exceeded
                   : (out.solutions > 0 ? SearchStatus::exists : SearchStatus::exhausted_none);
  return out;
}

SearchOutcome count_good(i64 n, i64 m, SearchBudget budget) {
  SearchOptions opts;
  opts.budget = budget;
  opts.witness_cap = 0;
  return enumerate_good(n, m, opts);
}

SearchOutcome exists_good(i64 n, i64 m, SearchBudget budget) {
  SearchOptions opts;
  opts.budget = budget;
  opts.budget.solution_limit = 1;
  opts.witness_cap = 1;
  opts.strategy = SearchStrategy::fail_first;
  return enumerate_good(n, m, opts);
}

UniquenessVerdict is_unique(i64 n, i64 m, SearchBudget budget, SearchOutcome* detail) {
  SearchOptions opts;
  opts.budget = budget;
  opts.budget.solution_limit = 2;
  opts.witness_cap = 2;
  SearchOutcome out = enumerate_good(n, m, opts);
  if (detail) *detail = std::move(out);
  const SearchOutcome& o = detail ? *detail : out;
  if (o.solutions >= 2) return UniquenessVerdict::multiple;
  if (o.status == SearchStatus::budget_exceeded) return UniquenessVerdict::budget_exceeded;
  if (o.solutions == 1) return UniquenessVerdict::unique;
  return UniquenessVerdict::none;
}

}  // namespace mgood
