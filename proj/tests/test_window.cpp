#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "cominimal/window.hpp"

using namespace cominimal;

namespace {

std::vector<i64> sorted(std::vector<i64> v) {
  std::sort(v.begin(), v.end());
  return v;
}

WindowedSet random_set(std::mt19937_64& rng, i64 span = 200) {
  std::uniform_int_distribution<i64> center(-span, span);
  std::uniform_int_distribution<i64> width(0, 80);
  i64 lo = center(rng);
  i64 hi = lo + width(rng);
  WindowedSet s(IntegerWindow::of(lo, hi));
  std::uniform_int_distribution<i64> pick(lo, hi);
  std::uniform_int_distribution<int> count(0, 40);
  int n = count(rng);
  for (int i = 0; i < n; ++i) s.add(pick(rng));
  return s;
}

}  // namespace

TEST_CASE("shift translates elements and window") {
  WindowedSet s = WindowedSet::of_elements(IntegerWindow::of(1, 3), {1, 3});
  WindowedSet t = s.shift(-17);
  CHECK(t.window() == IntegerWindow::of(-16, -14));
  CHECK(t.elements() == std::vector<i64>{-16, -14});

  WindowedSet k3 = WindowedSet::of_elements({2, 7});
  CHECK(k3.shift(-17).elements() == std::vector<i64>{-15, -10});

  WindowedSet empty(IntegerWindow::of(0, 0));
  WindowedSet shifted = empty.shift(5);
  CHECK(shifted.window() == IntegerWindow::of(5, 5));
  CHECK(shifted.empty());
}

TEST_CASE("shift round-trips") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    WindowedSet s = random_set(rng);
    std::uniform_int_distribution<i64> c(-1000, 1000);
    i64 shift = c(rng);
    CHECK(s.shift(shift).shift(-shift) == s);
  }
}

TEST_CASE("shift overflow is detected") {
  WindowedSet s = WindowedSet::of_elements({0, 1});
  CHECK_THROWS_AS(s.shift(std::numeric_limits<i64>::max()), arithmetic_overflow_error);
}

TEST_CASE("negate") {
  CHECK(WindowedSet::of_elements({-2, -1}).negate().elements() == std::vector<i64>{1, 2});
  CHECK(WindowedSet::of_elements({0}).negate().elements() == std::vector<i64>{0});
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    WindowedSet s = random_set(rng);
    CHECK(s.negate().negate() == s);
  }
}

TEST_CASE("set algebra matches a sorted-list reference") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    WindowedSet a = random_set(rng);
    WindowedSet b = random_set(rng);
    std::vector<i64> ea = a.elements();
    std::vector<i64> eb = b.elements();
    std::set<i64> ra(ea.begin(), ea.end());
    std::set<i64> rb(eb.begin(), eb.end());

    std::set<i64> u = ra;
    u.insert(rb.begin(), rb.end());
    std::vector<i64> inter, diff;
    std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(inter));
    std::set_difference(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(diff));

    IntegerWindow hull = a.window().hull(b.window());
    WindowedSet su = unite(a, b);
    CHECK(su.window() == hull);
    CHECK(su.elements() == std::vector<i64>(u.begin(), u.end()));
    CHECK(intersect(a, b).elements() == inter);
    CHECK(difference(a, b).elements() == diff);
    CHECK(is_subset(intersect(a, b), a));
  }
}

TEST_CASE("is_subset on the empty set") {
  WindowedSet empty(IntegerWindow::of(3, 9));
  WindowedSet x = WindowedSet::of_elements({1, 5});
  CHECK(is_subset(empty, x));
}

TEST_CASE("difference drops exactly the shared elements") {
  WindowedSet a = WindowedSet::of_elements({1, 2, 3});
  WindowedSet b = WindowedSet::of_elements({2});
  CHECK(difference(a, b).elements() == std::vector<i64>{1, 3});
}

TEST_CASE("intersect keeps the contained set") {
  WindowedSet i3 = WindowedSet::of_elements({-15, -10});
  WindowedSet band = WindowedSet::interval(IntegerWindow::of(-16, -9));
  CHECK(intersect(i3, band).same_elements(i3));
  CHECK(is_subset(i3, band));
}

TEST_CASE("halves and quarters") {
  WindowedSet s = WindowedSet::interval(IntegerWindow::of(1, 8));
  CHECK(s.half_or_quarter(Slice::left_half).elements() == std::vector<i64>{1, 2, 3, 4});
  CHECK(s.half_or_quarter(Slice::q2).elements() == std::vector<i64>{3, 4});

  WindowedSet band3 = WindowedSet::interval(IntegerWindow::of(-16, -9));
  CHECK(band3.half_or_quarter(Slice::right_half).elements() ==
        std::vector<i64>{-12, -11, -10, -9});

  WindowedSet odd = WindowedSet::interval(IntegerWindow::of(0, 2));
  CHECK_THROWS_AS(odd.half_or_quarter(Slice::left_half), precondition_error);
  WindowedSet six = WindowedSet::interval(IntegerWindow::of(0, 5));
  CHECK_THROWS_AS(six.half_or_quarter(Slice::q1), precondition_error);
  WindowedSet holes = WindowedSet::of_elements({1, 3});
  CHECK_THROWS_AS(holes.half_or_quarter(Slice::left_half), precondition_error);
}

TEST_CASE("quarters partition intervals of width 4k") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 40; ++i) {
    std::uniform_int_distribution<i64> lo_d(-500, 500);
    std::uniform_int_distribution<i64> q_d(1, 25);
    i64 lo = lo_d(rng);
    i64 width = 4 * q_d(rng);
    WindowedSet s = WindowedSet::interval(IntegerWindow::of(lo, lo + width - 1));
    WindowedSet q1 = s.half_or_quarter(Slice::q1);
    WindowedSet q2 = s.half_or_quarter(Slice::q2);
    WindowedSet q3 = s.half_or_quarter(Slice::q3);
    WindowedSet q4 = s.half_or_quarter(Slice::q4);
    CHECK(unite(q1, q2).same_elements(s.half_or_quarter(Slice::left_half)));
    CHECK(unite(q3, q4).same_elements(s.half_or_quarter(Slice::right_half)));
    WindowedSet all = unite(unite(q1, q2), unite(q3, q4));
    CHECK(all.same_elements(s));
    CHECK(q1.size() + q2.size() + q3.size() + q4.size() == s.size());
  }
}

TEST_CASE("runs are maximal and reconstruct the set") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    WindowedSet s = random_set(rng);
    WindowedSet back(s.window());
    i64 total = 0;
    for (auto [start, len] : s.runs()) {
      CHECK(!s.contains(start - 1));
      CHECK(!s.contains(start + len));
      total += len;
      for (i64 x = start; x < start + len; ++x) back.add(x);
    }
    CHECK(total == s.size());
    CHECK(back == s);
  }
}

TEST_CASE("self-aliased shifted OR doubles the set safely") {
  WindowedSet s = WindowedSet::of_elements(IntegerWindow::of(0, 10), {0, 1, 4});
  s.or_shifted(s, 2);
  CHECK(s.elements() == std::vector<i64>{0, 1, 2, 3, 4, 6});
}

TEST_CASE("windows validate their bounds") {
  CHECK_THROWS_AS(IntegerWindow::of(3, 2), precondition_error);
  CHECK(IntegerWindow::of(-5, 5).width() == 11);
  std::vector<i64> outside = {12};
  CHECK_THROWS_AS(WindowedSet::of_elements(IntegerWindow::of(0, 4), outside),
                  precondition_error);
}
