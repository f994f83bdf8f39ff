#pragma once

#include <vector>

#include "cominimal/families.hpp"
#include "cominimal/window.hpp"

namespace cominimal {

enum class Certification { window_only, window_and_tail };

const char* to_string(Certification c);

/// Outcome of the greedy prefix refinement of S (against T) or U (against V).
/// Elements of the base are visited by increasing magnitude; an element is
/// dropped exactly when removal_is_certified_safe approves it, so identical
/// inputs always yield identical results, and growing the budget never
/// changes the verdicts of earlier elements.
struct RefinementResult {
  FamilySpec base;
  FamilySpec partner;
  std::vector<i64> retained;  // sorted ascending
  std::vector<i64> removed;   // sorted ascending
  int budget = 0;
  Certification certification = Certification::window_and_tail;
  /// Elements kept only because a check was inconclusive (tail failed to
  /// stabilize). Empty in practice for the built-in families.
  std::vector<i64> flagged;
};

/// First `budget` elements of the base family by increasing |x| (most
/// negative last). Base must be S or U (or a refined prefix of them).
std::vector<i64> base_prefix_by_magnitude(const FamilySpec& base, int budget);

/// Decides whether the base element s0 can be removed while keeping
/// base-minus-removed a complement of the partner. The affected targets of
/// removing s0 are exactly s0 + partner. Each target below the horizon must
/// keep an alternative representation; the tail of targets must stabilize
/// to covered. Inconclusive checks return false (conservative retention) and
/// set *flagged_inconclusive when given.
bool removal_is_certified_safe(const FamilySpec& base, const std::vector<i64>& removed_so_far,
                               i64 s0, const FamilySpec& partner, IntegerWindow w,
                               bool* flagged_inconclusive = nullptr);

RefinementResult refine_greedy(const FamilySpec& base, const FamilySpec& partner, int budget,
                               IntegerWindow w);

}  // namespace cominimal
