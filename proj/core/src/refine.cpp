#include "cominimal/refine.hpp"

#include <algorithm>
#include <cmath>

#include "cominimal/runtime.hpp"
#include "cominimal/sumset.hpp"

namespace cominimal {

namespace {

i64 pow2(int k) { return i64(1) << k; }

bool is_v_partner(const FamilySpec& p) { return p.kind == FamilyKind::V; }

// Covered / not covered / inconclusive.
enum class Cover { yes, no, unknown };

Cover target_covered(i64 y, const FamilySpec& base, const std::vector<i64>& removed, i64 s0,
                     const FamilySpec& partner) {
  // A pair below the horizon certifies coverage. An empty list is treated
  // as uncovered, which can only retain elements, never drop them; the
  // representation tail is not consulted, keeping probe exponents bounded.
  RepresentationReport rep = representations_filtered(y, base, removed, s0, partner,
                                                      default_horizon(y), TailPolicy::skip);
  return rep.pairs.empty() ? Cover::no : Cover::yes;
}

}  // namespace

const char* to_string(Certification c) {
  return c == Certification::window_only ? "window-only" : "window+tail";
}

std::vector<i64> base_prefix_by_magnitude(const FamilySpec& base, int budget) {
  if (budget < 0 || budget > 200000) {
    throw precondition_error("prefix budget out of range");
  }
  std::vector<i64> prefix;
  for (int exp = 6; exp <= 40 && static_cast<int>(prefix.size()) < budget; ++exp) {
    prefix.clear();
    materialize(base, IntegerWindow::of(-pow2(exp), -1)).for_each([&](i64 x) {
      prefix.push_back(x);
    });
    std::sort(prefix.begin(), prefix.end(), [](i64 a, i64 b) { return -a < -b; });
    if (static_cast<int>(prefix.size()) >= budget) break;
  }
  if (static_cast<int>(prefix.size()) < budget) {
    throw precondition_error("budget exceeds enumerable prefix");
  }
  prefix.resize(static_cast<size_t>(budget));
  return prefix;
}

bool removal_is_certified_safe(const FamilySpec& base, const std::vector<i64>& removed_so_far,
                               i64 s0, const FamilySpec& partner, IntegerWindow w,
                               bool* flagged_inconclusive) {
  if (!member(base, s0)) throw precondition_error("removal check: s0 not in base");
  if (!w.contains(s0)) throw precondition_error("removal check: s0 outside window reach");

  // Removing s0 can only uncover targets in s0 + partner; every power below
  // the horizon is re-checked individually, and the tail of targets must be
  // constantly covered over the stabilization span.
  const int K = bit_length(s0 < 0 ? -s0 : s0) + default_config().refine_horizon_slack;
  const int span = default_config().tail_span;
  const bool both_signs = is_v_partner(partner);

  auto check_direction = [&](int sign) {
    for (int k = 0; k <= K + span; ++k) {
      i64 y = s0 + sign * pow2(k);
      Cover c = target_covered(y, base, removed_so_far, s0, partner);
      if (c != Cover::yes) return c;
    }
    return Cover::yes;
  };

  Cover c = check_direction(+1);
  if (c == Cover::unknown && flagged_inconclusive) *flagged_inconclusive = true;
  if (c != Cover::yes) return false;
  if (both_signs) {
    c = check_direction(-1);
    if (c == Cover::unknown && flagged_inconclusive) *flagged_inconclusive = true;
    if (c != Cover::yes) return false;
  }
  return true;
}

RefinementResult refine_greedy(const FamilySpec& base, const FamilySpec& partner, int budget,
                               IntegerWindow w) {
  bool st = base.kind == FamilyKind::S && partner.kind == FamilyKind::T;
  bool uv = base.kind == FamilyKind::U && partner.kind == FamilyKind::V;
  if (!st && !uv) {
    throw precondition_error("refine_greedy: base/partner must be (S,T) or (U,V)");
  }

  RefinementResult res;
  res.base = base;
  res.partner = partner;
  res.budget = budget;
  res.certification = Certification::window_and_tail;

  std::vector<i64> prefix = base_prefix_by_magnitude(base, budget);
  std::vector<i64> removed_sorted;
  for (i64 s0 : prefix) {
    bool inconclusive = false;
    if (removal_is_certified_safe(base, removed_sorted, s0, partner, w, &inconclusive)) {
      removed_sorted.insert(
          std::lower_bound(removed_sorted.begin(), removed_sorted.end(), s0), s0);
    } else {
      res.retained.push_back(s0);
      if (inconclusive) res.flagged.push_back(s0);
    }
  }
  res.removed = removed_sorted;
  std::sort(res.retained.begin(), res.retained.end());
  return res;
}

}  // namespace cominimal
