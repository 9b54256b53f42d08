#include "mgood/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "mgood/construct.hpp"

namespace mgood {

std::string_view to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::exists: return "exists";
    case RecordStatus::unique: return "unique";
    case RecordStatus::multiple: return "multiple";
    case RecordStatus::none: return "none";
    case RecordStatus::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::constructed: return "constructed";
    case Method::searched: return "searched";
    case Method::cached: return "cached";
    case Method::none: return "none";
  }
  return "?";
}

const std::map<i64, i64>& paper_count_table() {
  static const std::map<i64, i64> table = [] {
    std::map<i64, i64> t;
    for (i64 n = 1; n <= 5; ++n) t[n] = 1;
    t[6] = 2;
    for (i64 n = 7; n <= 12; ++n) t[n] = 1;
    t[13] = 2;
    t[14] = 1;
    t[15] = 20;
    t[16] = 17;
    t[17] = 56;
    t[18] = 95;
    t[19] = 33;
    t[20] = 11;
    t[21] = 2;
    t[22] = 7;
    t[23] = 1;
    t[24] = 2;
    for (i64 n = 25; n <= 30; ++n) t[n] = 1;
    t[31] = 14;
    t[32] = 1;
    t[33] = 64;
    t[34] = 468;
    t[35] = 5437;
    t[36] = 8764;
    t[37] = 10716;
    t[38] = 76718;
    t[39] = 3091;
    t[40] = 422767;
    return t;
  }();
  return table;
}

std::vector<i64> conjectured_unique_set(i64 max_n) {
  std::vector<i64> out;
  for (i64 n : {1, 2, 3, 4}) {
    if (n <= max_n) out.push_back(n);
  }
  for (i64 p = 9; p - 4 <= max_n; p *= 3) {
    for (i64 d : {-4, -2, -1, 0, 1, 2, 3, 5}) {
      if (p + d >= 1 && p + d <= max_n) out.push_back(p + d);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string CampaignReport::csv() const {
  std::ostringstream os;
  os << "n,class,status,method,count,nodes,ms\n";
  for (const auto& r : records) {
    os << r.n << "," << to_string(r.cls.cls) << "," << to_string(r.status) << ","
       << to_string(r.method) << ",";
    if (r.count) os << *r.count;
    os << "," << r.nodes << "," << r.ms << "\n";
  }
  return os.str();
}

namespace {

SearchBudget existence_defaults(SearchBudget b) {
  if (!b.node_limit && !b.time_limit) {
    b.node_limit = 100'000'000;
    b.time_limit = std::chrono::milliseconds(60'000);
  }
  return b;
}

template <typename Fn>
void run_over(const std::vector<i64>& ns, int jobs, std::vector<CampaignRecord>& records, Fn fn) {
  records.resize(ns.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < ns.size(); ++i) records[i] = fn(ns[i]);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= ns.size()) return;
      records[i] = fn(ns[i]);
    }
  };
  std::vector<std::thread> pool;
  int width = std::min<int>(jobs, static_cast<int>(ns.size()));
  pool.reserve(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

bool witness_revalidates(const std::string& text, i64 n, i64 m) {
  return parse(text, n, m).ok();
}

}  // namespace

CampaignReport verify_existence(i64 lo, i64 hi, const CampaignConfig& cfg) {
  CampaignReport rep;
  rep.kind = "existence";
  rep.m = cfg.m;
  rep.lo = lo;
  rep.hi = hi;
  rep.jobs = cfg.jobs;
  SearchBudget budget = existence_defaults(cfg.per_n_budget);

  std::vector<i64> ns;
  for (i64 n = lo; n <= hi; ++n) ns.push_back(n);
  run_over(ns, cfg.jobs, rep.records, [&](i64 n) {
    CampaignRecord rec;
    rec.n = n;
    rec.cls = classify(n);
    if (cfg.cache) {
      if (const CacheRecord* hit = cfg.cache->lookup(cfg.m, n, "exists")) {
        rec.status = hit->status == "exists" ? RecordStatus::exists
                     : hit->status == "none" ? RecordStatus::none
                                             : RecordStatus::budget_exceeded;
        rec.method = Method::cached;
        rec.witness = hit->witness;
        if (!rec.witness.empty() && !witness_revalidates(rec.witness, n, cfg.m)) {
          rec.contradiction = true;
        }
        return rec;
      }
    }
    auto t0 = std::chrono::steady_clock::now();
    if (cfg.policy != Policy::search_only && cfg.m == 3) {
      if (auto built = construct_3good(n)) {
        rec.status = RecordStatus::exists;
        rec.method = Method::constructed;
        rec.witness = render(built->partition);
        rec.contradiction = !validate(built->partition).ok();
        rec.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
        if (cfg.cache) {
          cfg.cache->append({kToolkitVersion, cfg.m, n, "exists", "exists", std::nullopt, 0,
                             rec.ms, rec.witness});
        }
        return rec;
      }
    }
    if (cfg.policy != Policy::search_only && cfg.m == 2) {
      auto built = construct_2good(n);
      rec.status = RecordStatus::exists;
      rec.method = Method::constructed;
      rec.witness = render(built.partition);
      rec.contradiction = !validate(built.partition).ok();
      return rec;
    }
    if (cfg.policy == Policy::construct_only) {
      rec.status = RecordStatus::none;
      rec.method = Method::none;
      return rec;
    }
    SearchOptions opts;
    opts.budget = budget;
    opts.budget.solution_limit = 1;
    opts.witness_cap = 1;
    opts.max_part_size = cfg.max_part_size;
    SearchOutcome out = enumerate_good(n, cfg.m, opts);
    rec.method = Method::searched;
    rec.nodes = out.nodes;
    rec.ms = out.elapsed.count();
    if (out.solutions > 0) {
      rec.status = RecordStatus::exists;
      rec.witness = render(out.witnesses.front());
      rec.contradiction = !validate(out.witnesses.front()).ok();
    } else if (out.exhausted) {
      rec.status = RecordStatus::none;
    } else {
      rec.status = RecordStatus::budget_exceeded;
    }
    if (cfg.cache && rec.status != RecordStatus::budget_exceeded) {
      cfg.cache->append({kToolkitVersion, cfg.m, n, "exists",
                         std::string(to_string(rec.status)), std::nullopt, rec.nodes, rec.ms,
                         rec.witness});
    }
    return rec;
  });
  for (const auto& r : rep.records) rep.contradictions += r.contradiction;
  return rep;
}

CampaignReport verify_uniqueness(const std::vector<i64>& candidates, const CampaignConfig& cfg) {
  CampaignReport rep;
  rep.kind = "uniqueness";
  rep.m = cfg.m;
  if (!candidates.empty()) {
    rep.lo = *std::min_element(candidates.begin(), candidates.end());
    rep.hi = *std::max_element(candidates.begin(), candidates.end());
  }
  rep.jobs = cfg.jobs;
  std::vector<i64> ns = candidates;
  std::sort(ns.begin(), ns.end());

  run_over(ns, cfg.jobs, rep.records, [&](i64 n) {
    CampaignRecord rec;
    rec.n = n;
    rec.cls = classify(n);
    if (cfg.cache) {
      if (const CacheRecord* hit = cfg.cache->lookup(cfg.m, n, "unique")) {
        rec.method = Method::cached;
        rec.status = hit->status == "unique"     ? RecordStatus::unique
                     : hit->status == "multiple" ? RecordStatus::multiple
                     : hit->status == "none"     ? RecordStatus::none
                                                 : RecordStatus::budget_exceeded;
        return rec;
      }
    }
    SearchOutcome detail;
    UniquenessVerdict v = is_unique(n, cfg.m, cfg.per_n_budget, &detail);
    rec.method = Method::searched;
    rec.nodes = detail.nodes;
    rec.ms = detail.elapsed.count();
    if (!detail.witnesses.empty()) rec.witness = render(detail.witnesses.front());
    switch (v) {
      case UniquenessVerdict::unique: rec.status = RecordStatus::unique; break;
      case UniquenessVerdict::multiple: rec.status = RecordStatus::multiple; break;
      case UniquenessVerdict::none: rec.status = RecordStatus::none; break;
      case UniquenessVerdict::budget_exceeded: rec.status = RecordStatus::budget_exceeded; break;
    }
    if (cfg.cache && rec.status != RecordStatus::budget_exceeded) {
      cfg.cache->append({kToolkitVersion, cfg.m, n, "unique",
                         std::string(to_string(rec.status)), std::nullopt, rec.nodes, rec.ms,
                         rec.witness});
    }
    return rec;
  });
  for (const auto& r : rep.records) rep.contradictions += r.contradiction;
  return rep;
}

CampaignReport reproduce_counts(i64 lo, i64 hi, const CampaignConfig& cfg) {
  CampaignReport rep;
  rep.kind = "counts";
  rep.m = cfg.m;
  rep.lo = lo;
  rep.hi = hi;
  rep.jobs = cfg.jobs;
  std::vector<i64> ns;
  for (i64 n = lo; n <= hi; ++n) ns.push_back(n);

  run_over(ns, cfg.jobs, rep.records, [&](i64 n) {
    CampaignRecord rec;
    rec.n = n;
    rec.cls = classify(n);
    auto expected = paper_count_table().find(n);
    if (expected != paper_count_table().end()) rec.expected = expected->second;
    if (cfg.cache) {
      if (const CacheRecord* hit = cfg.cache->lookup(cfg.m, n, "count"); hit && hit->count) {
        rec.method = Method::cached;
        rec.count = hit->count;
        rec.status = *hit->count > 0 ? RecordStatus::exists : RecordStatus::none;
        rec.contradiction = rec.expected && static_cast<i64>(*rec.count) != *rec.expected;
        return rec;
      }
    }
    SearchOutcome out = count_good(n, cfg.m, cfg.per_n_budget);
    rec.method = Method::searched;
    rec.nodes = out.nodes;
    rec.ms = out.elapsed.count();
    if (out.exhausted) {
      rec.count = out.count;
      rec.status = *out.count > 0 ? RecordStatus::exists : RecordStatus::none;
      rec.contradiction = rec.expected && static_cast<i64>(*rec.count) != *rec.expected;
      if (cfg.cache) {
        cfg.cache->append({kToolkitVersion, cfg.m, n, "count",
                           std::string(to_string(rec.status)), rec.count, rec.nodes, rec.ms, ""});
      }
    } else {
      rec.status = RecordStatus::budget_exceeded;
    }
    return rec;
  });
  for (const auto& r : rep.records) rep.contradictions += r.contradiction;
  return rep;
}

}  // namespace mgood
