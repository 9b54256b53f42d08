#include "mgood/nice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mgood {

std::vector<int> ternary_digits(i64 x) {
  std::vector<int> digits;
  if (x <= 0) return {0};
  while (x > 0) {
    digits.push_back(static_cast<int>(x % 3));
    x /= 3;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string ternary_string(i64 x) {
  std::string out;
  for (int d : ternary_digits(x)) out += static_cast<char>('0' + d);
  return out;
}

bool digit2_free(i64 x) {
  while (x > 0) {
    if (x % 3 == 2) return false;
    x /= 3;
  }
  return true;
}

namespace {

// value of the lowest nonzero ternary digit position (x > 0, digit-2-free or not)
i64 lowest_digit_value(i64 x) {
  i64 p = 1;
  while (x % 3 == 0) {
    x /= 3;
    p *= 3;
  }
  return p;
}

}  // namespace

std::vector<NiceCertificate> nice_certificates(i64 k) {
  std::vector<NiceCertificate> out;
  if (k < 0) return out;
  i64 n = 3 * k + 2;
  for (i64 np = 1; np < n; ++np) {
    i64 len = n - np + 1;
    if (len % 2 != 0) continue;
    i64 sum = (n + np) * len / 2;
    if (!digit2_free(sum)) continue;
    if (lowest_digit_value(sum) < 2 * np + 1) continue;
    out.push_back({k, n, np, sum, ternary_string(sum)});
  }
  return out;
}

std::vector<std::pair<i64, std::vector<NiceCertificate>>> enumerate_nice(i64 limit) {
  std::vector<std::pair<i64, std::vector<NiceCertificate>>> out;
  for (i64 k = 0; k < limit; ++k) {
    auto certs = nice_certificates(k);
    if (!certs.empty()) out.emplace_back(k, std::move(certs));
  }
  return out;
}

std::vector<i64> sequence(SequenceName name, int count) {
  std::vector<i64> out;
  if (count <= 0) return out;
  switch (name) {
    case SequenceName::d:
      out.push_back(1);
      if (count >= 2) out.push_back(3);
      while (static_cast<int>(out.size()) < count) out.push_back(3 * (out.back() - 1));
      break;
    case SequenceName::e:
      out.push_back(1);
      while (static_cast<int>(out.size()) < count) out.push_back(3 * out.back() - 1);
      break;
    case SequenceName::f:
      out.push_back(-1);
      while (static_cast<int>(out.size()) < count) out.push_back(3 * out.back() - 1);
      break;
  }
  return out;
}

std::vector<i64> sequence(char name, int count) {
  switch (name) {
    case 'd': return sequence(SequenceName::d, count);
    case 'e': return sequence(SequenceName::e, count);
    case 'f': return sequence(SequenceName::f, count);
    default: return {};
  }
}

namespace {

// peel levels off a sequence: each level's value v must appear at position 0,
// position 1, and every second position after that; removing all v's exposes
// the next level
struct PeelOutcome {
  std::vector<i64> level_values;
  bool pass = true;
  std::string detail;
};

PeelOutcome peel(std::vector<i64> seq, int max_levels = 12) {
  PeelOutcome out;
  for (int level = 0; !seq.empty() && level < max_levels; ++level) {
    i64 v = seq[0];
    out.level_values.push_back(v);
    if (seq.size() > 1 && seq[1] != v) {
      out.pass = false;
      out.detail += "level " + std::to_string(v) + " does not open with a double; ";
    }
    for (std::size_t i = 1; i < seq.size(); i += 2) {
      if (seq[i] != v) {
        out.pass = false;
        out.detail += "level " + std::to_string(v) + " breaks alternation at index " +
                      std::to_string(i) + " (value " + std::to_string(seq[i]) + "); ";
        break;
      }
    }
    std::erase(seq, v);
  }
  if (out.pass) out.detail = "levels clean";
  return out;
}

std::string join(const std::vector<i64>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ",";
    os << xs[i];
  }
  return os.str();
}

}  // namespace

PatternReport pattern_report(i64 limit) {
  PatternReport rep;
  rep.limit = limit;
  auto nice = enumerate_nice(limit);
  std::map<i64, std::vector<NiceCertificate>> by_k;
  for (auto& [k, certs] : nice) {
    rep.nice_ks.push_back(k);
    if (certs.size() >= 2) rep.double_certificate_ks.push_back(k);
    by_k.emplace(k, std::move(certs));
  }

  // remarkable pairs: adjacent nice k, k+1 with n'(k) = n'(k+1) + 3
  for (i64 k : rep.nice_ks) {
    auto next = by_k.find(k + 1);
    if (next == by_k.end()) continue;
    bool match = false;
    for (const auto& a : by_k[k]) {
      for (const auto& b : next->second) {
        if (a.n_prime == b.n_prime + 3) match = true;
      }
    }
    if (match) rep.remarkable_pairs.emplace_back(k, k + 1);
  }

  // doubling blocks over pair starts: a block boundary sits at every strict
  // new maximum of the start gaps; block sizes are conjectured to double
  std::vector<i64> starts;
  for (auto& [a, b] : rep.remarkable_pairs) starts.push_back(a);
  std::vector<i64> start_gaps;
  if (!starts.empty()) {
    rep.blocks.push_back({starts[0]});
    i64 max_gap = 0;
    for (std::size_t i = 1; i < starts.size(); ++i) {
      i64 g = starts[i] - starts[i - 1];
      start_gaps.push_back(g);
      if (g > max_gap) {
        rep.blocks.push_back({});
        max_gap = g;
      }
      rep.blocks.back().push_back(starts[i]);
    }
  }

  // outside the pattern: unpaired nice k, plus members of blocks that do not
  // complete their doubling size (the trailing block, typically)
  std::set<i64> paired;
  for (auto& [a, b] : rep.remarkable_pairs) {
    paired.insert(a);
    paired.insert(b);
  }
  std::set<i64> outside;
  for (i64 k : rep.nice_ks) {
    if (!paired.count(k)) outside.insert(k);
  }
  {
    i64 expected = 1;
    bool doubling = true;
    for (const auto& block : rep.blocks) {
      if (static_cast<i64>(block.size()) != expected) {
        for (i64 s : block) {
          outside.insert(s);
          outside.insert(s + 1);
        }
        if (&block != &rep.blocks.back()) doubling = false;
      }
      expected *= 2;
    }
    rep.checks.push_back({"block_doubling", doubling,
                          "block sizes " + [&] {
                            std::vector<i64> sz;
                            for (const auto& b : rep.blocks) sz.push_back(static_cast<i64>(b.size()));
                            return join(sz);
                          }() + "; trailing block may be incomplete"});
  }
  rep.outside_pattern.assign(outside.begin(), outside.end());

  // gap peel on the full nice sequence (expected values e: 1, 2, 5, 14, ...)
  {
    std::vector<i64> gaps;
    for (std::size_t i = 1; i < rep.nice_ks.size(); ++i) {
      gaps.push_back(rep.nice_ks[i] - rep.nice_ks[i - 1]);
    }
    PeelOutcome po = peel(gaps);
    rep.checks.push_back({"nice_gap_peel_full", po.pass,
                          "levels " + join(po.level_values) + "; " + po.detail});
    // same peel with outside-pattern k removed (keeping 0, which supplies the
    // leading double); clean when the conjectured structure holds
    std::vector<i64> kept;
    for (i64 k : rep.nice_ks) {
      if (!outside.count(k) || k == 0) kept.push_back(k);
    }
    std::vector<i64> kept_gaps;
    for (std::size_t i = 1; i < kept.size(); ++i) kept_gaps.push_back(kept[i] - kept[i - 1]);
    PeelOutcome pk = peel(kept_gaps);
    rep.checks.push_back({"nice_gap_peel_in_pattern", pk.pass,
                          "levels " + join(pk.level_values) + "; " + pk.detail});
  }

  // peel on pair-start gaps (expected values 3, 6, 15, 42, ...)
  {
    PeelOutcome po = peel(start_gaps);
    bool values_match = true;
    auto d = sequence(SequenceName::d, static_cast<int>(po.level_values.size()) + 1);
    for (std::size_t i = 0; i < po.level_values.size(); ++i) {
      if (i + 1 >= d.size() || po.level_values[i] != d[i + 1]) values_match = false;
    }
    rep.checks.push_back({"pair_start_gap_peel", po.pass && values_match,
                          "levels " + join(po.level_values) + " (d-sequence from 3); " + po.detail});
  }

  // interval-length differences over in-pattern k: every second difference is
  // 6; the rest are 6*(e or f values); their successive differences are all
  // divisible by 18
  {
    std::vector<i64> in_pattern;
    for (i64 k : rep.nice_ks) {
      if (paired.count(k) && !outside.count(k)) in_pattern.push_back(k);
    }
    std::vector<i64> lengths;
    for (i64 k : in_pattern) {
      const auto& c = by_k[k].front();
      lengths.push_back(c.n - c.n_prime + 1);
    }
    std::vector<i64> diffs;
    for (std::size_t i = 1; i < lengths.size(); ++i) diffs.push_back(lengths[i] - lengths[i - 1]);
    bool every_second_6 = true;
    for (std::size_t i = 0; i < diffs.size(); i += 2) {
      if (diffs[i] != 6) every_second_6 = false;
    }
    rep.checks.push_back({"every_second_length_diff_6", every_second_6, join(diffs)});

    std::vector<i64> rest;
    for (std::size_t i = 1; i < diffs.size(); i += 2) rest.push_back(diffs[i]);
    bool div18 = true;
    std::vector<i64> rest_diffs;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      rest_diffs.push_back(rest[i] - rest[i - 1]);
      if (rest_diffs.back() % 18 != 0) div18 = false;
    }
    rep.checks.push_back({"length_diff_remainder_div18", div18, join(rest_diffs)});

    auto e = sequence(SequenceName::e, 12);
    auto f = sequence(SequenceName::f, 12);
    bool ef = true;
    std::vector<i64> scaled;
    for (i64 x : rest) {
      if (x % 6 != 0) {
        ef = false;
        break;
      }
      i64 v = x / 6;
      scaled.push_back(v);
      if (std::find(e.begin(), e.end(), v) == e.end() &&
          std::find(f.begin(), f.end(), v) == f.end()) {
        ef = false;
      }
    }
    rep.checks.push_back({"length_diff_over6_in_e_f", ef, join(scaled)});
  }

  // ternary successor: within each remarkable pair, the sum of k+1 equals the
  // sum of k with a 1 written just above its lowest 1-digit
  {
    bool pass = true;
    std::string detail;
    for (auto& [a, b] : rep.remarkable_pairs) {
      bool found = false;
      for (const auto& ca : by_k[a]) {
        for (const auto& cb : by_k[b]) {
          if (cb.interval_sum == ca.interval_sum + 3 * lowest_digit_value(ca.interval_sum)) {
            found = true;
          }
        }
      }
      if (!found) {
        pass = false;
        detail += "pair (" + std::to_string(a) + "," + std::to_string(b) + ") fails; ";
      }
    }
    if (pass) detail = "holds on all " + std::to_string(rep.remarkable_pairs.size()) + " pairs";
    rep.checks.push_back({"ternary_successor", pass, detail});
  }

  return rep;
}

std::string PatternReport::text() const {
  std::ostringstream os;
  os << "3-nice k < " << limit << ": " << nice_ks.size() << " values\n";
  os << "double certificates: " << join(double_certificate_ks) << "\n";
  os << "remarkable pairs: ";
  for (std::size_t i = 0; i < remarkable_pairs.size(); ++i) {
    if (i) os << " ";
    os << "(" << remarkable_pairs[i].first << "," << remarkable_pairs[i].second << ")";
  }
  os << "\noutside pattern: " << join(outside_pattern) << "\n";
  for (const auto& c : checks) {
    os << (c.pass ? "pass " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  return os.str();
}

std::vector<ExtensionRow> extension_tables(i64 a_max, i64 b_max) {
  std::vector<ExtensionRow> rows;
  for (i64 a = 0; a <= a_max; ++a) {
    for (i64 b = 0, half = 0; b <= b_max; ++b, half = 0) {
      i64 p = 1;
      for (i64 i = 0; i < b; ++i) p *= 3;
      half = (p - 1) / 2;
      if (half < a) continue;  // requires (3^b - 1)/2 >= a
      ExtensionRow row;
      row.a = a;
      row.b = b;
      row.k = a + half;
      row.n = 3 * row.k + 2;
      row.n_prime = row.n - (6 * a + 2) + 1;
      row.sum = (row.n + row.n_prime) * (6 * a + 2) / 2;
      row.ternary = ternary_string(row.sum);
      row.min_t = b + 2;
      row.digit2free = digit2_free(row.sum);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace mgood
