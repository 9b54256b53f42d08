#include "mgood/json_io.hpp"

namespace mgood {

using nlohmann::json;

json to_json(const GoodPartition& p) {
  json parts = json::array();
  for (const Part& part : p.parts) parts.push_back(part.elements);
  return json{{"n", p.n}, {"m", p.m}, {"parts", parts}};
}

std::optional<GoodPartition> partition_from_json(const json& j, std::string* error) {
  auto fail = [&](const std::string& msg) -> std::optional<GoodPartition> {
    if (error) *error = msg;
    return std::nullopt;
  };
  if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("parts")) {
    return fail("expected object with n, m, parts");
  }
  std::vector<Part> parts;
  for (const auto& arr : j["parts"]) {
    Part p;
    for (const auto& e : arr) p.elements.push_back(e.get<i64>());
    parts.push_back(std::move(p));
  }
  Verdict v;
  auto gp = canonicalize(std::move(parts), j["n"].get<i64>(), j["m"].get<i64>(), &v);
  if (!gp) return fail(v.summary());
  return gp;
}

namespace {

json parts_json(const std::vector<Part>& parts) {
  json out = json::array();
  for (const Part& p : parts) out.push_back(p.elements);
  return out;
}

}  // namespace

json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const ReductionStep& s : t.steps) {
    json step{{"rule", s.rule}, {"from", s.n_from}, {"to", s.n_to}};
    step["added"] = parts_json(s.added);
    if (!s.removed.empty()) step["removed"] = parts_json(s.removed);
    steps.push_back(std::move(step));
  }
  return json{{"n", t.n}, {"steps", steps}, {"terminal", t.terminal}};
}

json to_json(const SearchOutcome& o) {
  json j{{"status", std::string(to_string(o.status))},
         {"nodes", o.nodes},
         {"elapsed_ms", o.elapsed.count()},
         {"solutions", o.solutions},
         {"exhausted", o.exhausted}};
  if (o.count) j["count"] = *o.count;
  return j;
}

json to_json(const NiceCertificate& c) {
  return json{{"k", c.k},
              {"n", c.n},
              {"n_prime", c.n_prime},
              {"sum", c.interval_sum},
              {"ternary", c.ternary}};
}

json to_json(const OffsetScheme& s) {
  json pairs = json::array();
  for (auto [a, b] : s.pairs) pairs.push_back(json::array({a, b}));
  return json{{"k", s.k},
              {"window", json::array({s.window_lo, s.window_hi})},
              {"pairs", pairs},
              {"regroups", s.regroups}};
}

json to_json(const Classification& c) {
  json j{{"n", c.n}, {"class", std::string(to_string(c.cls))}};
  if (c.t >= 0) j["t"] = c.t;
  if (c.k >= 0) j["k"] = c.k;
  if (c.s >= 0) j["s"] = c.s;
  if (c.cls == NClass::open_case) j["within_theorem_frontier"] = c.within_theorem_frontier;
  return j;
}

json to_json(const CampaignReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) {
    json j{{"n", rec.n},
           {"class", std::string(to_string(rec.cls.cls))},
           {"status", std::string(to_string(rec.status))},
           {"method", std::string(to_string(rec.method))},
           {"nodes", rec.nodes},
           {"ms", rec.ms}};
    if (rec.count) j["count"] = *rec.count;
    if (rec.expected) j["expected"] = *rec.expected;
    if (!rec.witness.empty()) j["witness"] = rec.witness;
    if (rec.contradiction) j["contradiction"] = true;
    records.push_back(std::move(j));
  }
  return json{{"kind", r.kind},      {"m", r.m},       {"lo", r.lo},
              {"hi", r.hi},          {"jobs", r.jobs}, {"version", r.version},
              {"contradictions", r.contradictions},    {"records", records}};
}

json to_json(const PatternReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  json pairs = json::array();
  for (auto [a, b] : r.remarkable_pairs) pairs.push_back(json::array({a, b}));
  return json{{"limit", r.limit},
              {"nice_ks", r.nice_ks},
              {"double_certificate_ks", r.double_certificate_ks},
              {"remarkable_pairs", pairs},
              {"blocks", r.blocks},
              {"outside_pattern", r.outside_pattern},
              {"checks", checks}};
}

json to_json(const ExtensionRow& r) {
  return json{{"a", r.a},           {"b", r.b},       {"k", r.k},
              {"n_prime", r.n_prime}, {"n", r.n},     {"sum", r.sum},
              {"ternary", r.ternary}, {"min_t", r.min_t}, {"digit2free", r.digit2free}};
}

}  // namespace mgood
