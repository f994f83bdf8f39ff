#include "cominimal/oracle.hpp"

#include <algorithm>

namespace cominimal {
namespace oracle {

WindowedSet naive_sumset(const std::vector<i64>& a, const std::vector<i64>& b,
                         IntegerWindow target) {
  WindowedSet out(target);
  for (i64 x : a) {
    for (i64 y : b) {
      i64 s = x + y;
      if (s >= target.lo && s <= target.hi) out.add(s);
    }
  }
  return out;
}

std::vector<std::pair<i64, i64>> brute_reps(i64 y, const std::vector<i64>& a,
                                            const std::vector<i64>& b) {
  std::vector<std::pair<i64, i64>> out;
  for (i64 x : a) {
    for (i64 z : b) {
      if (x + z == y) out.emplace_back(x, z);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.second < r.second; });
  return out;
}

Mask cyclic_sumset(Mask a, Mask b, int m) {
  Mask out = 0;
  for (int i = 0; i < m; ++i) {
    if (!(a & (Mask(1) << i))) continue;
    for (int j = 0; j < m; ++j) {
      if (!(b & (Mask(1) << j))) continue;
      out |= Mask(1) << ((i + j) % m);
    }
  }
  return out;
}

bool brute_cominimal_pair(Mask a, Mask b, int m) {
  const Mask full = (Mask(1) << m) - 1;
  if (a == 0 || b == 0) return false;
  if (cyclic_sumset(a, b, m) != full) return false;
  for (int i = 0; i < m; ++i) {
    Mask bit = Mask(1) << i;
    if ((a & bit) && a != bit && cyclic_sumset(a & ~bit, b, m) == full) return false;
    if ((b & bit) && b != bit && cyclic_sumset(a, b & ~bit, m) == full) return false;
  }
  // Removing the only element of a singleton leaves the empty set, which is
  // not an admissible complement; minimality is then vacuous on that side.
  return true;
}

std::vector<std::pair<Mask, Mask>> exhaustive_cyclic_cominimal(int m) {
  if (m < 1 || m > 14) throw precondition_error("exhaustive enumeration needs 1 <= m <= 14");
  const Mask full = (Mask(1) << m) - 1;
  std::vector<std::pair<Mask, Mask>> out;
  for (Mask a = 1; a <= full; ++a) {
    for (Mask b = 1; b <= full; ++b) {
      if (cyclic_sumset(a, b, m) != full) continue;  // complement pre-filter
      if (brute_cominimal_pair(a, b, m)) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace oracle
}  // namespace cominimal
