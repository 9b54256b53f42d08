#include "mgood/trace.hpp"

#include <algorithm>

#include "mgood/construct.hpp"

namespace mgood {

std::optional<GoodPartition> replay(const ReductionTrace& trace, i64 m, std::string* error) {
  auto fail = [&](const std::string& msg) -> std::optional<GoodPartition> {
    if (error) *error = msg;
    return std::nullopt;
  };

  std::vector<Part> parts;
  if (trace.terminal.rfind("base:", 0) == 0) {
    i64 base_n = std::stoll(trace.terminal.substr(5));
    if (m != 3 || base_n < 1 || base_n > 13) return fail("unknown terminal " + trace.terminal);
    parts = base_partition_3(base_n).parts;
  } else if (trace.terminal != "empty") {
    return fail("unknown terminal " + trace.terminal);
  }

  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    for (const Part& rm : it->removed) {
      auto pos = std::find(parts.begin(), parts.end(), rm);
      if (pos == parts.end()) {
        return fail("step to n=" + std::to_string(it->n_from) + ": removed part " +
                    render_parts({rm}) + " not present");
      }
      parts.erase(pos);
    }
    parts.insert(parts.end(), it->added.begin(), it->added.end());
  }

  Verdict v;
  auto gp = canonicalize(std::move(parts), trace.n, m, &v);
  if (!gp) return fail("replayed partition invalid: " + v.summary());
  return gp;
}

}  // namespace mgood
