#include "cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <algorithm>

#include <CLI11.hpp>

#include "mgood/campaign.hpp"
#include "mgood/construct.hpp"
#include "mgood/json_io.hpp"
#include "mgood/nice.hpp"
#include "mgood/scheme.hpp"

namespace mgood::cli {

namespace {

using nlohmann::json;

struct Common {
  i64 m = 3;
  std::string format = "text";
  i64 budget_ms = 0;
  i64 budget_nodes = 0;
  int jobs = 1;
  std::string cache_path;
  std::string range;

  SearchBudget budget() const {
    SearchBudget b;
    if (budget_ms > 0) b.time_limit = std::chrono::milliseconds(budget_ms);
    if (budget_nodes > 0) b.node_limit = static_cast<std::uint64_t>(budget_nodes);
    return b;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_budget = true) {
  cmd->add_option("--m", c.m, "base m (default 3)");
  cmd->add_option("--format", c.format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv", "bfile"}));
  if (with_budget) {
    cmd->add_option("--budget-ms", c.budget_ms, "per-question time budget in milliseconds");
    cmd->add_option("--budget-nodes", c.budget_nodes, "per-question node budget");
  }
  cmd->add_option("--jobs", c.jobs, "worker count for campaigns (default 1)");
  cmd->add_option("--cache", c.cache_path, "result cache path (also MGOOD_CACHE)");
}

std::string cache_from_env() {
  const char* env = std::getenv("MGOOD_CACHE");
  return env ? env : "";
}

bool parse_range(const std::string& text, i64& lo, i64& hi) {
  auto sep = text.find("..");
  if (sep == std::string::npos) return false;
  try {
    lo = std::stoll(text.substr(0, sep));
    hi = std::stoll(text.substr(sep + 2));
  } catch (...) {
    return false;
  }
  return lo >= 1 && hi >= lo;
}

int emit_campaign(const CampaignReport& rep, const Common& c, std::ostream& out) {
  if (c.format == "json") {
    out << to_json(rep).dump(2) << "\n";
  } else if (c.format == "csv") {
    out << rep.csv();
  } else {
    for (const auto& r : rep.records) {
      out << "n=" << r.n << " class=" << to_string(r.cls.cls) << " status=" << to_string(r.status)
          << " method=" << to_string(r.method);
      if (r.count) out << " count=" << *r.count;
      if (r.expected) out << " expected=" << *r.expected;
      if (r.contradiction) out << " CONTRADICTION";
      out << "\n";
    }
    out << rep.kind << ": " << rep.records.size() << " records, " << rep.contradictions
        << " contradictions\n";
  }
  return rep.contradictions == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"m-good partition toolkit: constructions, exhaustive search and "
               "verification for partitions of [n] into parts of size <= m with "
               "power-of-m sums"};
  app.require_subcommand(1);

  Common c;
  i64 n = 0;
  i64 limit = 123;
  bool with_trace = false;
  std::string kind = "existence";
  std::string seq_names = "def";
  int seq_count = 6;
  i64 a_max = 6, b_max = 6;
  std::string notation;

  auto* construct = app.add_subcommand("construct", "build a partition of [n]");
  construct->add_option("n", n)->required();
  construct->add_flag("--trace", with_trace, "include the reduction trace");
  add_common(construct, c, false);

  auto* verify = app.add_subcommand("verify", "existence sweep over n or a range");
  verify->add_option("n", n);
  verify->add_option("--range", c.range, "inclusive range lo..hi");
  add_common(verify, c);

  auto* count = app.add_subcommand("count", "exact partition count");
  count->add_option("n", n);
  count->add_option("--range", c.range, "inclusive range lo..hi");
  add_common(count, c);

  auto* enumerate = app.add_subcommand("enumerate", "stream every partition of [n]");
  enumerate->add_option("n", n)->required();
  enumerate->add_option("--limit", limit, "stop after this many witnesses")->default_val(0);
  add_common(enumerate, c);

  auto* unique = app.add_subcommand("unique", "two-witness uniqueness probe");
  unique->add_option("n", n)->required();
  add_common(unique, c);

  auto* classify_cmd = app.add_subcommand("classify", "reduction class of n");
  classify_cmd->add_option("n", n);
  classify_cmd->add_option("--range", c.range, "inclusive range lo..hi");
  add_common(classify_cmd, c, false);

  auto* nice = app.add_subcommand("nice", "3-nice k values with certificates");
  nice->add_option("--limit", limit, "scan k < limit")->default_val(123);
  add_common(nice, c, false);

  auto* sequences = app.add_subcommand("sequences", "the d/e/f recurrence sequences");
  sequences->add_option("--name", seq_names, "subset of d, e, f");
  sequences->add_option("--count", seq_count, "terms per sequence");
  add_common(sequences, c, false);

  auto* patterns = app.add_subcommand("patterns", "conjectured structure of the 3-nice set");
  patterns->add_option("--limit", limit)->default_val(123);
  add_common(patterns, c, false);

  auto* tables = app.add_subcommand("tables", "extension tables k = a + (3^b-1)/2");
  tables->add_option("--a-max", a_max);
  tables->add_option("--b-max", b_max);
  add_common(tables, c, false);

  auto* restore = app.add_subcommand("restore", "rebuild a 3-good partition from its triplets");
  restore->add_option("n", n)->required();
  restore->add_option("triplets", notation, "triplet set in text notation, e.g. \"(6+10+11)\"");
  add_common(restore, c, false);

  auto* campaign = app.add_subcommand("campaign", "verification campaign over a range");
  campaign->add_option("--kind", kind, "existence, uniqueness or counts")
      ->check(CLI::IsMember({"existence", "uniqueness", "counts"}));
  campaign->add_option("--range", c.range, "inclusive range lo..hi")->required();
  add_common(campaign, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  if (c.cache_path.empty()) c.cache_path = cache_from_env();
  std::optional<ResultCache> cache;
  if (!c.cache_path.empty()) cache.emplace(c.cache_path);

  try {
    if (*construct) {
      if (c.m == 2) {
        Constructed built = construct_2good(n);
        if (c.format == "json") {
          json j = to_json(built.partition);
          if (with_trace) j["trace"] = to_json(built.trace);
          out << j.dump() << "\n";
        } else {
          out << render(built.partition) << "\n";
          if (with_trace) out << to_json(built.trace).dump() << "\n";
        }
        return 0;
      }
      if (c.m != 3) {
        err << "construct: only m = 2 and m = 3 have closed constructions\n";
        return 1;
      }
      auto built = construct_3good(n);
      if (!built) {
        err << "no construction known for n = " << n << " (open case); try `verify " << n << "`\n";
        return 1;
      }
      if (c.format == "json") {
        json j = to_json(built->partition);
        if (with_trace) j["trace"] = to_json(built->trace);
        out << j.dump() << "\n";
      } else {
        out << render(built->partition) << "\n";
        if (with_trace) out << to_json(built->trace).dump() << "\n";
      }
      return 0;
    }

    if (*verify) {
      i64 lo = n, hi = n;
      if (!c.range.empty() && !parse_range(c.range, lo, hi)) {
        err << "bad --range, expected lo..hi\n";
        return 2;
      }
      if (lo < 1) {
        err << "verify: n required\n";
        return 2;
      }
      CampaignConfig cfg;
      cfg.m = c.m;
      cfg.per_n_budget = c.budget();
      cfg.jobs = c.jobs;
      cfg.cache = cache ? &*cache : nullptr;
      if (c.m > 3) cfg.max_part_size = static_cast<int>(c.m);
      CampaignReport rep = verify_existence(lo, hi, cfg);
      int rc = emit_campaign(rep, c, out);
      for (const auto& r : rep.records) {
        if (r.status == RecordStatus::none || r.status == RecordStatus::budget_exceeded) rc = 1;
      }
      return rc;
    }

    if (*count) {
      i64 lo = n, hi = n;
      if (!c.range.empty() && !parse_range(c.range, lo, hi)) {
        err << "bad --range, expected lo..hi\n";
        return 2;
      }
      if (lo < 1) {
        err << "count: n required\n";
        return 2;
      }
      if (lo == hi && c.format == "text") {
        SearchOutcome o = count_good(lo, c.m, c.budget());
        if (!o.exhausted) {
          err << "budget exceeded after " << o.nodes << " nodes\n";
          return 1;
        }
        out << *o.count << "\n";
        return 0;
      }
      CampaignConfig cfg;
      cfg.m = c.m;
      cfg.per_n_budget = c.budget();
      cfg.jobs = c.jobs;
      cfg.cache = cache ? &*cache : nullptr;
      return emit_campaign(reproduce_counts(lo, hi, cfg), c, out);
    }

    if (*enumerate) {
      SearchOptions opts;
      opts.budget = c.budget();
      if (limit > 0) opts.budget.solution_limit = static_cast<std::uint64_t>(limit);
      opts.witness_cap = 0;
      bool json_out = c.format == "json";
      opts.on_witness = [&](const GoodPartition& gp) {
        if (json_out) {
          out << to_json(gp).dump() << "\n";
        } else {
          out << render(gp) << "\n";
        }
        return true;
      };
      SearchOutcome o = enumerate_good(n, c.m, opts);
      if (json_out) out << to_json(o).dump() << "\n";
      return o.status == SearchStatus::budget_exceeded ? 1 : 0;
    }

    if (*unique) {
      SearchOutcome detail;
      UniquenessVerdict v = is_unique(n, c.m, c.budget(), &detail);
      if (c.format == "json") {
        json j = to_json(detail);
        j["verdict"] = std::string(to_string(v));
        out << j.dump() << "\n";
      } else {
        out << to_string(v) << "\n";
      }
      return v == UniquenessVerdict::budget_exceeded ? 1 : 0;
    }

    if (*classify_cmd) {
      i64 lo = n, hi = n;
      if (!c.range.empty() && !parse_range(c.range, lo, hi)) {
        err << "bad --range, expected lo..hi\n";
        return 2;
      }
      if (lo < 1) {
        err << "classify: n required\n";
        return 2;
      }
      for (i64 i = lo; i <= hi; ++i) {
        Classification cl = classify(i);
        if (c.format == "json") {
          out << to_json(cl).dump() << "\n";
        } else {
          out << i << " " << to_string(cl.cls);
          if (cl.cls == NClass::open_case) {
            out << " t=" << cl.t << " k=" << cl.k
                << (cl.within_theorem_frontier ? " frontier" : " settled");
          }
          out << "\n";
        }
      }
      return 0;
    }

    if (*nice) {
      auto rows = enumerate_nice(limit);
      if (c.format == "csv") {
        out << "k,n,n_prime,sum_decimal,sum_ternary\n";
        for (const auto& [k, certs] : rows) {
          for (const auto& cert : certs) {
            out << cert.k << "," << cert.n << "," << cert.n_prime << "," << cert.interval_sum
                << "," << cert.ternary << "\n";
          }
        }
      } else if (c.format == "json") {
        json j = json::array();
        for (const auto& [k, certs] : rows) {
          for (const auto& cert : certs) j.push_back(to_json(cert));
        }
        out << j.dump(2) << "\n";
      } else if (c.format == "bfile") {
        // OEIS b-file: index k-value
        i64 idx = 1;
        for (const auto& [k, certs] : rows) out << idx++ << " " << k << "\n";
      } else {
        for (const auto& [k, certs] : rows) {
          for (const auto& cert : certs) {
            out << "k=" << cert.k << "  [" << cert.n_prime << ".." << cert.n
                << "]  sum=" << cert.interval_sum << "  ternary=" << cert.ternary << "\n";
          }
        }
        out << rows.size() << " 3-nice k below " << limit << "\n";
      }
      return 0;
    }

    if (*sequences) {
      json j;
      for (char name : seq_names) {
        if (name != 'd' && name != 'e' && name != 'f') continue;
        auto vals = sequence(name, seq_count);
        if (c.format == "json") {
          j[std::string(1, name)] = vals;
        } else {
          out << name << ":";
          for (i64 v : vals) out << " " << v;
          out << "\n";
        }
      }
      if (c.format == "json") out << j.dump() << "\n";
      return 0;
    }

    if (*patterns) {
      PatternReport rep = pattern_report(limit);
      if (c.format == "json") {
        out << to_json(rep).dump(2) << "\n";
      } else {
        out << rep.text();
      }
      return 0;
    }

    if (*tables) {
      auto rows = extension_tables(a_max, b_max);
      if (c.format == "csv") {
        out << "a,b,k,n_prime,n,sum,ternary,min_t,digit2free\n";
        for (const auto& r : rows) {
          out << r.a << "," << r.b << "," << r.k << "," << r.n_prime << "," << r.n << "," << r.sum
              << "," << r.ternary << "," << r.min_t << "," << (r.digit2free ? 1 : 0) << "\n";
        }
      } else if (c.format == "json") {
        json j = json::array();
        for (const auto& r : rows) j.push_back(to_json(r));
        out << j.dump(2) << "\n";
      } else {
        i64 cur_a = -1;
        for (const auto& r : rows) {
          if (r.a != cur_a) {
            cur_a = r.a;
            out << "a=" << r.a << "  window length " << 6 * r.a + 2 << "\n";
          }
          out << "  b=" << r.b << "  k=" << r.k << "  [" << r.n_prime << ".." << r.n
              << "]  sum=" << r.sum << "  ternary=" << r.ternary << "  t>=" << r.min_t << "\n";
        }
      }
      return 0;
    }

    if (*restore) {
      TripletSet ts;
      ts.n = n;
      if (!notation.empty()) {
        std::vector<Part> parts;
        std::string text = notation;
        std::size_t pos = 0;
        while (pos < text.size()) {
          auto open = text.find('(', pos);
          if (open == std::string::npos) break;
          auto close = text.find(')', open);
          if (close == std::string::npos) {
            err << "restore: unterminated clause at offset " << open << "\n";
            return 2;
          }
          Part part;
          std::istringstream nums(text.substr(open + 1, close - open - 1));
          std::string tok;
          while (std::getline(nums, tok, '+')) {
            try {
              part.elements.push_back(std::stoll(tok));
            } catch (...) {
              err << "restore: bad integer in clause at offset " << open << "\n";
              return 2;
            }
          }
          std::sort(part.elements.begin(), part.elements.end());
          parts.push_back(std::move(part));
          pos = close + 1;
        }
        ts.triplets = std::move(parts);
      }
      RestoreResult rr = restore_from_triplets(ts);
      if (!rr.ok()) {
        err << "restore: " << rr.failure << "\n";
        return 1;
      }
      if (c.format == "json") {
        out << to_json(*rr.partition).dump() << "\n";
      } else {
        out << render(*rr.partition) << "\n";
      }
      return 0;
    }

    if (*campaign) {
      i64 lo = 0, hi = 0;
      if (!parse_range(c.range, lo, hi)) {
        err << "bad --range, expected lo..hi\n";
        return 2;
      }
      CampaignConfig cfg;
      cfg.m = c.m;
      cfg.per_n_budget = c.budget();
      cfg.jobs = c.jobs;
      cfg.cache = cache ? &*cache : nullptr;
      if (c.m > 3) cfg.max_part_size = static_cast<int>(c.m);
      CampaignReport rep;
      if (kind == "existence") {
        rep = verify_existence(lo, hi, cfg);
      } else if (kind == "counts") {
        rep = reproduce_counts(lo, hi, cfg);
      } else {
        std::vector<i64> candidates;
        for (i64 i = lo; i <= hi; ++i) candidates.push_back(i);
        rep = verify_uniqueness(candidates, cfg);
      }
      return emit_campaign(rep, c, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace mgood::cli
