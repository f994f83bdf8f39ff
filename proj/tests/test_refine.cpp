#include <algorithm>

#include "doctest.h"

#include "cominimal/families.hpp"
#include "cominimal/refine.hpp"
#include "cominimal/verify.hpp"

using namespace cominimal;

namespace {
const IntegerWindow kReach = IntegerWindow::of(-(i64(1) << 40), i64(1) << 40);
}

TEST_CASE("prefix enumeration by magnitude") {
  CHECK(base_prefix_by_magnitude(FamilySpec::S(), 10) ==
        std::vector<i64>{-2, -4, -6, -10, -15, -18, -20, -29, -30, -34});
  CHECK(base_prefix_by_magnitude(FamilySpec::U(), 6) ==
        std::vector<i64>{-1, -2, -11, -19, -29, -30});
}

TEST_CASE("single-element removal certificates") {
  CHECK(removal_is_certified_safe(FamilySpec::S(), {}, -135, FamilySpec::T(), kReach));
  CHECK_FALSE(removal_is_certified_safe(FamilySpec::S(), {}, -2, FamilySpec::T(), kReach));
  CHECK_FALSE(removal_is_certified_safe(FamilySpec::S(), {}, -4, FamilySpec::T(), kReach));
  CHECK_FALSE(removal_is_certified_safe(FamilySpec::S(), {}, -15, FamilySpec::T(), kReach));
  CHECK_FALSE(removal_is_certified_safe(FamilySpec::U(), {}, -1, FamilySpec::V(), kReach));
  CHECK_FALSE(removal_is_certified_safe(FamilySpec::U(), {}, -2, FamilySpec::V(), kReach));
  CHECK_THROWS_AS(removal_is_certified_safe(FamilySpec::S(), {}, -3, FamilySpec::T(), kReach),
                  precondition_error);
}

TEST_CASE("greedy refinement of the bounded-below base") {
  RefinementResult r = refine_greedy(FamilySpec::S(), FamilySpec::T(), 200, kReach);
  CHECK(r.budget == 200);
  CHECK(r.retained.size() + r.removed.size() == 200);
  CHECK(r.flagged.empty());
  CHECK(r.certification == Certification::window_and_tail);

  auto retained_has = [&](i64 x) {
    return std::binary_search(r.retained.begin(), r.retained.end(), x);
  };
  CHECK(retained_has(-2));
  CHECK(retained_has(-4));

  // Forced clusters inside the processed prefix are never dropped.
  i64 deepest = r.retained.front();
  for (i64 x : r.removed) deepest = std::min(deepest, x);
  for (int n = 3; n <= 10; ++n) {
    i64 shift1 = 1 + (i64(1) << (n + 1));
    for (i64 p = (i64(1) << (n - 3)) + 1 - shift1; p <= (i64(1) << (n - 2)) - shift1; ++p) {
      if (p >= deepest) CHECK(retained_has(p));
    }
    i64 shift2 = 1 + (i64(1) << (n + 2));
    for (i64 p = 3 * (i64(1) << (n - 1)) + 1 - shift2;
         p <= 3 * (i64(1) << (n - 1)) + (i64(1) << (n - 3)) - shift2; ++p) {
      if (p >= deepest) CHECK(retained_has(p));
    }
  }

  // Deterministic, and re-running with a smaller budget reproduces the
  // verdicts of the shared prefix.
  RefinementResult again = refine_greedy(FamilySpec::S(), FamilySpec::T(), 200, kReach);
  CHECK(again.retained == r.retained);
  CHECK(again.removed == r.removed);
  RefinementResult shorter = refine_greedy(FamilySpec::S(), FamilySpec::T(), 120, kReach);
  for (i64 x : shorter.removed) {
    CHECK(std::binary_search(r.removed.begin(), r.removed.end(), x));
  }
  for (i64 x : shorter.retained) {
    CHECK(std::binary_search(r.retained.begin(), r.retained.end(), x));
  }

  // The refined prefix (plus the untouched tail of the base) still covers.
  CHECK(verify_complement_window(FamilySpec::S(), FamilySpec::T(), IntegerWindow::of(-2048, 2048),
                                 r.removed)
            .holds);
}

TEST_CASE("greedy refinement of the symmetric base keeps the small layer") {
  RefinementResult r = refine_greedy(FamilySpec::U(), FamilySpec::V(), 24, kReach);
  CHECK(std::binary_search(r.retained.begin(), r.retained.end(), i64(-1)));
  CHECK(std::binary_search(r.retained.begin(), r.retained.end(), i64(-2)));
  CHECK(verify_complement_window(FamilySpec::U(), FamilySpec::V(), IntegerWindow::of(-512, 512),
                                 r.removed)
            .holds);
}

TEST_CASE("refined prefix families") {
  FamilySpec ss = FamilySpec::script_S(200);
  RefinementResult r = refine_greedy(FamilySpec::S(), FamilySpec::T(), 200, kReach);
  for (i64 x : r.removed) CHECK_FALSE(member(ss, x));
  for (i64 x : r.retained) CHECK(member(ss, x));
  // Beyond the processed prefix the refined family falls back to the base.
  CHECK(member(ss, -1793));
  WindowedSet mat = materialize(ss, IntegerWindow::of(-700, -1));
  mat.for_each([&](i64 x) { CHECK(member(ss, x)); });
  for (i64 x = -700; x <= -1; ++x) {
    CHECK(mat.contains(x) == member(ss, x));
  }
}

TEST_CASE("refinement rejects unsupported pairs") {
  CHECK_THROWS_AS(refine_greedy(FamilySpec::S(), FamilySpec::V(), 10, kReach),
                  precondition_error);
}
