#include <map>

#include "doctest.h"

#include "cominimal/families.hpp"
#include "cominimal/verify.hpp"

using namespace cominimal;

namespace {

std::map<std::pair<std::string, int>, ClaimResult> by_id(const std::vector<ClaimResult>& claims) {
  std::map<std::pair<std::string, int>, ClaimResult> out;
  for (const auto& c : claims) out[{c.claim_id, c.n}] = c;
  return out;
}

}  // namespace

TEST_CASE("complement coverage windows") {
  CHECK(verify_complement_window(FamilySpec::S(), FamilySpec::T(), IntegerWindow::of(-512, 512))
            .holds);
  CHECK(verify_complement_window(FamilySpec::U(), FamilySpec::V(), IntegerWindow::of(-512, 512))
            .holds);

  ClaimResult broken = verify_complement_window(FamilySpec::S(), FamilySpec::T(),
                                                IntegerWindow::of(-4, 0), {-2});
  CHECK_FALSE(broken.holds);
  CHECK(broken.counterexample == -1);
}

TEST_CASE("partner-element minimality witnesses") {
  std::vector<i64> removable;
  for (int k = 0; k <= 8; ++k) removable.push_back(i64(1) << k);
  WitnessReport rep = verify_minimality(FamilySpec::S(), FamilySpec::T(), removable,
                                        IntegerWindow::of(-4096, 0));
  CHECK(rep.all_witnessed());
  CHECK(rep.certification == Certification::window_and_tail);

  std::map<i64, i64> found;
  for (const auto& e : rep.entries) found[e.removed] = *e.witness;
  CHECK(found[1] == -1);
  // The seeded target -38 = -5 - (1 + 2^5) is rejected (it keeps the
  // representation (-39, 1)); the scan settles on -37 instead.
  CHECK(found[2] == -37);
  CHECK(found[4] == -11);

  // Every witness for 2^{n-1} sits in the second quarter of the right half
  // of band n.
  for (int n = 3; n <= 8; ++n) {
    i64 b = i64(1) << (n - 1);
    IntegerWindow q = quarter(right_half(script_I_window(n)), 2);
    CHECK(q.contains(found[b]));
  }
}

TEST_CASE("minimality witnesses for the symmetric pair") {
  std::vector<i64> removable = {1, -1, 2, -2, 4, -4, 8, -8, 16, -16};
  WitnessReport rep = verify_minimality(FamilySpec::U(), FamilySpec::V(), removable,
                                        IntegerWindow::of(-4096, 64));
  CHECK(rep.all_witnessed());
  std::map<i64, i64> found;
  for (const auto& e : rep.entries) found[e.removed] = *e.witness;
  CHECK(found[1] == -39);
  CHECK(found[-1] == -40);
  CHECK(found[2] == 1);
  CHECK(found[-2] == -4);
  CHECK(found[-4] == -6);
  CHECK(found[4] == -36);  // the third-quarter peak -35 keeps (-19, -16)
  CHECK(found[8] == -69);
  CHECK(found[-8] == -67);
}

TEST_CASE("base-element necessity witnesses") {
  IntegerWindow w = IntegerWindow::of(-4096, 4096);
  CHECK(verify_element_necessity_A(FamilySpec::S(), FamilySpec::T(), -4, w) == -3);
  CHECK(verify_element_necessity_A(FamilySpec::S(), FamilySpec::T(), -2, w) == -1);
  CHECK(verify_element_necessity_A(FamilySpec::U(), FamilySpec::V(), -40, w) == -39);
  CHECK_THROWS_AS(verify_element_necessity_A(FamilySpec::S(), FamilySpec::T(), -3, w),
                  precondition_error);
}

TEST_CASE("bounded-below claim suite holds over its stated ranges") {
  auto claims = check_claims_ST(2, 10, 14);
  for (const auto& c : claims) {
    CHECK_MESSAGE(c.holds, c.claim_id, " n=", c.n);
  }
  // Identical verdicts under a larger truncation index.
  auto wide = check_claims_ST(2, 10, 22);
  REQUIRE(claims.size() == wide.size());
  for (size_t i = 0; i < claims.size(); ++i) {
    CHECK(claims[i].claim_id == wide[i].claim_id);
    CHECK(claims[i].holds == wide[i].holds);
  }
}

TEST_CASE("symmetric claim suite: the one false instance is located exactly") {
  auto claims = check_claims_UV(2, 10, 14);
  int failures = 0;
  for (const auto& c : claims) {
    if (!c.holds) {
      ++failures;
      CHECK(c.claim_id == "uv-third-quarter-peak-forces-power");
      CHECK(c.n == 5);
      REQUIRE(c.counterexample.has_value());
      CHECK(*c.counterexample == -35);
    }
  }
  CHECK(failures == 1);

  // The counterexample re-checks independently: -35 = -19 + -16 with -19 a
  // layer-4 member and -16 a signed power.
  CHECK(member(FamilySpec::U(), -19));
  CHECK(band_index(-19) == 4);
  CHECK(member(FamilySpec::V(), -16));
  CHECK(-19 + -16 == -35);

  auto wide = check_claims_UV(2, 10, 22);
  REQUIRE(claims.size() == wide.size());
  for (size_t i = 0; i < claims.size(); ++i) CHECK(claims[i].holds == wide[i].holds);
}

TEST_CASE("symmetric claim suite: named single-target claims") {
  auto claims = by_id(check_claims_UV(6, 10, 14));
  CHECK(claims.at({"uv-one-forces-two", 0}).holds);
  CHECK(claims.at({"uv-minus39-forces-one", 0}).holds);
  CHECK(claims.at({"uv-minus40-forces-minus-one", 0}).holds);
  CHECK(claims.at({"uv-minus4-forces-minus-two", 0}).holds);
  CHECK(claims.at({"uv-minus6-forces-minus-four", 0}).holds);
  for (int n = 6; n <= 10; ++n) {
    CHECK(claims.at({"uv-third-quarter-peak-forces-power", n}).holds);
    CHECK(claims.at({"uv-third-largest-forces-negative-power", n}).holds);
  }
}

TEST_CASE("central-band disjointness") {
  for (const auto& c : check_uv_finiteness(4, 10)) CHECK(c.holds);
  // Re-running with a larger n only adds instances; earlier verdicts stay.
  auto again = check_uv_finiteness(4, 12);
  CHECK(again.size() == 9);
  for (const auto& c : again) CHECK(c.holds);
  CHECK_THROWS_AS(check_uv_finiteness(3, 8), precondition_error);
}

TEST_CASE("claim suite index preconditions") {
  CHECK_THROWS_AS(check_claims_ST(1, 8), precondition_error);
  CHECK_THROWS_AS(check_claims_ST(3, 13), precondition_error);
  CHECK_THROWS_AS(check_claims_UV(5, 4), precondition_error);
}

TEST_CASE("interval slicing helpers") {
  IntegerWindow b = IntegerWindow::of(-16, -9);
  CHECK(left_half(b) == IntegerWindow::of(-16, -13));
  CHECK(right_half(b) == IntegerWindow::of(-12, -9));
  CHECK(quarter(b, 1) == IntegerWindow::of(-16, -15));
  CHECK(quarter(b, 4) == IntegerWindow::of(-10, -9));
  CHECK_THROWS_AS(left_half(IntegerWindow::of(0, 2)), precondition_error);
}
