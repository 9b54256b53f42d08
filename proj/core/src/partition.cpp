#include "mgood/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mgood {

std::optional<int> is_power_of(i64 m, i64 x) {
  if (m < 2 || x < 1) return std::nullopt;
  int e = 0;
  while (x % m == 0) {
    x /= m;
    ++e;
  }
  if (x == 1) return e;
  return std::nullopt;
}

i64 power_at_least(i64 m, i64 x) {
  i64 p = 1;
  while (p < x) p *= m;
  return p;
}

i64 Part::sum() const { return std::accumulate(elements.begin(), elements.end(), i64{0}); }

Part Part::of(std::initializer_list<i64> es) {
  Part p;
  p.elements.assign(es);
  std::sort(p.elements.begin(), p.elements.end());
  return p;
}

Instance::Instance(i64 n_, i64 m_) : n(n_), m(m_) {
  if (n < 1 || n >= kMaxN) throw std::invalid_argument("Instance: n out of range");
  if (m < 2) throw std::invalid_argument("Instance: m must be >= 2");
}

std::string Verdict::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].rule << ": " << violations[i].detail;
  }
  return os.str();
}

namespace {

void check_part(const Part& p, i64 m, std::size_t idx, Verdict& v) {
  std::ostringstream who;
  who << "part #" << idx << " " << render_parts({p});
  if (p.elements.empty() || static_cast<i64>(p.elements.size()) > m) {
    v.violations.push_back({"part-size", who.str() + " has size " + std::to_string(p.elements.size())});
    if (p.elements.empty()) return;
  }
  for (std::size_t i = 0; i + 1 < p.elements.size(); ++i) {
    if (p.elements[i] >= p.elements[i + 1]) {
      v.violations.push_back({"part-order", who.str() + " is not strictly increasing"});
      break;
    }
  }
  if (!p.elements.empty() && p.elements.front() < 1) {
    v.violations.push_back({"part-positive", who.str() + " has a non-positive element"});
  }
  if (!is_power_of(m, p.sum())) {
    v.violations.push_back({"part-sum", who.str() + " sums to " + std::to_string(p.sum()) +
                                            ", not a power of " + std::to_string(m)});
  }
}

}  // namespace

Verdict validate(const GoodPartition& p) {
  Verdict v;
  if (p.n < 1 || p.n >= kMaxN) v.violations.push_back({"n-range", "n = " + std::to_string(p.n)});
  if (p.m < 2) v.violations.push_back({"m-range", "m = " + std::to_string(p.m)});
  if (!v.ok()) return v;

  std::vector<char> seen(static_cast<std::size_t>(p.n) + 1, 0);
  i64 covered = 0;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const Part& part = p.parts[i];
    check_part(part, p.m, i, v);
    for (i64 e : part.elements) {
      if (e < 1 || e > p.n) {
        v.violations.push_back({"range", std::to_string(e) + " outside [1," + std::to_string(p.n) + "]"});
      } else if (seen[static_cast<std::size_t>(e)]) {
        v.violations.push_back({"duplicate", std::to_string(e) + " covered twice"});
      } else {
        seen[static_cast<std::size_t>(e)] = 1;
        ++covered;
      }
    }
  }
  if (covered != p.n) {
    v.violations.push_back({"cover", std::to_string(covered) + " of " + std::to_string(p.n) + " covered"});
  }
  for (std::size_t i = 0; i + 1 < p.parts.size(); ++i) {
    if (p.parts[i].elements.empty() || p.parts[i + 1].elements.empty()) break;
    if (p.parts[i].min() > p.parts[i + 1].min()) {
      v.violations.push_back({"canonical", "parts not sorted by minimum element"});
      break;
    }
  }
  if (v.ok()) {
    i64 total = 0;
    for (const Part& part : p.parts) total += part.sum();
    if (total != triangular(p.n)) {
      v.violations.push_back({"total", "part sums add to " + std::to_string(total) + ", expected " +
                                           std::to_string(triangular(p.n))});
    }
  }
  return v;
}

std::optional<GoodPartition> canonicalize(std::vector<Part> parts, i64 n, i64 m, Verdict* verdict) {
  for (Part& p : parts) std::sort(p.elements.begin(), p.elements.end());
  std::sort(parts.begin(), parts.end(),
            [](const Part& a, const Part& b) { return a.elements < b.elements; });
  GoodPartition gp{n, m, std::move(parts)};
  Verdict v = validate(gp);
  if (verdict) *verdict = v;
  if (!v.ok()) return std::nullopt;
  return gp;
}

std::string render_parts(const std::vector<Part>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += '(';
    for (std::size_t j = 0; j < parts[i].elements.size(); ++j) {
      if (j) out += '+';
      out += std::to_string(parts[i].elements[j]);
    }
    out += ')';
  }
  return out;
}

std::string render(const GoodPartition& p) { return render_parts(p.parts); }

namespace {

struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::optional<i64> number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    i64 value = 0;
    for (std::size_t i = start; i < pos; ++i) {
      value = value * 10 + (s[i] - '0');
      if (value >= kMaxN) return std::nullopt;
    }
    return value;
  }
};

}  // namespace

ParseResult parse(std::string_view text, i64 n, i64 m) {
  ParseResult res;
  Scanner sc{text};
  std::vector<Part> parts;
  auto fail = [&](const std::string& msg) {
    sc.skip_ws();
    res.syntax_error_offset = sc.pos;
    res.error = msg + " at offset " + std::to_string(sc.pos);
    return res;
  };

  while (true) {
    if (!sc.eat('(')) return fail("expected '('");
    Part part;
    while (true) {
      auto num = sc.number();
      if (!num) return fail("expected integer");
      part.elements.push_back(*num);
      if (sc.eat('+')) continue;
      if (sc.eat(')')) break;
      return fail("expected '+' or ')'");
    }
    parts.push_back(std::move(part));
    sc.skip_ws();
    if (sc.pos == text.size()) break;
    if (!sc.eat('+')) return fail("expected '+' or end of input");
  }

  auto gp = canonicalize(std::move(parts), n, m, &res.verdict);
  if (!gp) {
    res.error = "invalid partition: " + res.verdict.summary();
    return res;
  }
  res.partition = std::move(gp);
  return res;
}

RestoreResult restore_from_triplets(const TripletSet& ts) {
  RestoreResult res;
  if (ts.n < 1) {
    res.failure = "n must be positive";
    return res;
  }
  std::vector<char> used(static_cast<std::size_t>(ts.n) + 1, 0);
  std::vector<Part> parts;
  for (const Part& t : ts.triplets) {
    if (t.elements.size() != 3) {
      res.failure = "triplet " + render_parts({t}) + " does not have 3 elements";
      return res;
    }
    if (!is_power_of(3, t.sum())) {
      res.failure = "triplet " + render_parts({t}) + " sum is not a power of 3";
      return res;
    }
    for (i64 e : t.elements) {
      if (e < 1 || e > ts.n || used[static_cast<std::size_t>(e)]) {
        res.failure = "triplet element " + std::to_string(e) + " out of range or reused";
        return res;
      }
      used[static_cast<std::size_t>(e)] = 1;
    }
    parts.push_back(t);
  }
  for (i64 x = ts.n; x >= 1; --x) {
    if (used[static_cast<std::size_t>(x)]) continue;
    i64 p = power_at_least(3, x);
    if (p == x) {
      parts.push_back(Part{{x}});
      used[static_cast<std::size_t>(x)] = 1;
      continue;
    }
    i64 y = p - x;
    if (y >= x) {
      res.failure = "no completion: " + std::to_string(x) + " needs partner " + std::to_string(y) +
                    " >= itself";
      return res;
    }
    if (used[static_cast<std::size_t>(y)]) {
      res.failure = "no completion: " + std::to_string(x) + " forces pair with " + std::to_string(y) +
                    ", which is covered";
      return res;
    }
    parts.push_back(Part{{y, x}});
    used[static_cast<std::size_t>(x)] = 1;
    used[static_cast<std::size_t>(y)] = 1;
  }
  Verdict v;
  auto gp = canonicalize(std::move(parts), ts.n, 3, &v);
  if (!gp) {
    res.failure = "no completion: " + v.summary();
    return res;
  }
  res.partition = std::move(gp);
  return res;
}

ResidueReport residue_checks(i64 n, i64 m) {
  ResidueReport r;
  r.n = n;
  r.m = m;
  r.triangular_mod_m = triangular(n) % m;
  if (m > 3 && n % 2 == 0 && (n / 2 - 1) % m == 0) {
    r.obstruction = true;
    r.t = (n / 2 - 1) / m;
  }
  return r;
}

}  // namespace mgood
