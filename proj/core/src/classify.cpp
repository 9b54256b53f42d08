#include "mgood/classify.hpp"

namespace mgood {

std::string_view to_string(NClass c) {
  switch (c) {
    case NClass::base: return "base";
    case NClass::power: return "power";
    case NClass::power_plus_one: return "power_plus_one";
    case NClass::mirror: return "mirror";
    case NClass::mod0_reduction: return "mod0_reduction";
    case NClass::mod1_reduction: return "mod1_reduction";
    case NClass::open_case: return "open_case";
  }
  return "?";
}

Classification classify(i64 n) {
  Classification c;
  c.n = n;
  if (n == 1) {
    c.cls = NClass::base;
    c.t = 0;
    return c;
  }
  i64 above = power_at_least(3, n);
  if (above == n) {
    c.cls = NClass::power;
    i64 t = 0;
    for (i64 p = 1; p < n; p *= 3) ++t;
    c.t = t;
    return c;
  }
  if ((above + 1) / 2 <= n) {  // (3^s+1)/2 <= n <= 3^s - 1
    c.cls = NClass::mirror;
    i64 s = 0;
    for (i64 p = 1; p < above; p *= 3) ++s;
    c.s = s;
    return c;
  }
  i64 t = 0, q = 1;
  while (q * 3 <= n) {
    q *= 3;
    ++t;
  }
  i64 r = n - q;
  c.t = t;
  c.k = r / 3;
  switch (r % 3) {
    case 0: c.cls = NClass::mod0_reduction; break;
    case 1: c.cls = c.k == 0 ? NClass::power_plus_one : NClass::mod1_reduction; break;
    default:
      c.cls = NClass::open_case;
      c.within_theorem_frontier = t >= 4;
      break;
  }
  return c;
}

}  // namespace mgood
