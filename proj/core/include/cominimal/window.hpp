#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "cominimal/errors.hpp"

namespace cominimal {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Closed integer interval [lo, hi]. Immutable value type.
struct IntegerWindow {
  i64 lo = 0;
  i64 hi = -1;  // default-constructed window is invalid; use of()

  static IntegerWindow of(i64 lo, i64 hi);

  i64 width() const { return hi - lo + 1; }
  bool contains(i64 x) const { return x >= lo && x <= hi; }
  IntegerWindow hull(const IntegerWindow& o) const;
  IntegerWindow shifted(i64 c) const;  // throws arithmetic_overflow_error
  IntegerWindow negated() const;

  bool operator==(const IntegerWindow&) const = default;
};

/// Largest window width a dense set will materialize (bits).
inline constexpr i64 kMaxDenseWidth = i64(1) << 28;

enum class Slice { left_half, right_half, q1, q2, q3, q4 };

/// Finite subset of Z held as a dense bitset over an integer window.
/// Bit i corresponds to the integer window.lo + i. Immutable in spirit:
/// every operation returns a new value; instances are safe to share across
/// threads once built.
class WindowedSet {
 public:
  explicit WindowedSet(IntegerWindow w);
  WindowedSet() : WindowedSet(IntegerWindow::of(0, 0)) {}

  /// The full interval {w.lo, ..., w.hi}.
  static WindowedSet interval(IntegerWindow w);
  /// Set holding exactly the listed elements; window defaults to their hull
  /// (or to `w` when given, which must contain them all).
  static WindowedSet of_elements(std::span<const i64> elems);
  static WindowedSet of_elements(IntegerWindow w, std::span<const i64> elems);
  static WindowedSet of_elements(std::initializer_list<i64> elems);
  static WindowedSet of_elements(IntegerWindow w, std::initializer_list<i64> elems);

  const IntegerWindow& window() const { return window_; }
  bool contains(i64 x) const;
  i64 size() const;
  bool empty() const;
  i64 min_element() const;  // throws precondition_error when empty
  i64 max_element() const;

  std::vector<i64> elements() const;
  /// Maximal runs of consecutive members as (start, length) pairs.
  std::vector<std::pair<i64, i64>> runs() const;
  void for_each(const std::function<void(i64)>& fn) const;

  void add(i64 x);  // x must lie in the window
  void remove(i64 x);

  WindowedSet shift(i64 c) const;
  WindowedSet negate() const;
  /// Set with the same members on a different window (must contain them).
  WindowedSet rewindow(IntegerWindow w) const;
  /// Members inside w, on window w.
  WindowedSet clip(IntegerWindow w) const;

  /// The two operands are re-windowed to the hull of both windows.
  friend WindowedSet unite(const WindowedSet& a, const WindowedSet& b);
  friend WindowedSet intersect(const WindowedSet& a, const WindowedSet& b);
  friend WindowedSet difference(const WindowedSet& a, const WindowedSet& b);
  friend bool is_subset(const WindowedSet& a, const WindowedSet& b);

  /// Halves and quarters of a set that forms one contiguous interval.
  /// Halves require even cardinality, quarters cardinality divisible by 4.
  WindowedSet half_or_quarter(Slice which) const;

  /// Same members <=> equal (windows may differ).
  bool same_elements(const WindowedSet& o) const;
  bool operator==(const WindowedSet& o) const;

  /// Internal word access for the sumset kernel.
  std::span<const u64> words() const { return words_; }

  /// OR `src` shifted by `delta` into this set, clipped to this window.
  void or_shifted(const WindowedSet& src, i64 delta);

 private:
  void normalize_tail();
  IntegerWindow window_;
  std::vector<u64> words_;
};

}  // namespace cominimal
