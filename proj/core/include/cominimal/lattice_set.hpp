#pragma once

#include <vector>

#include "cominimal/window.hpp"

namespace cominimal {

using Point = std::vector<i64>;

/// Axis-aligned box in Z^d, one closed interval per axis.
struct LatticeWindow {
  std::vector<IntegerWindow> dims;

  static LatticeWindow of(std::vector<IntegerWindow> dims);
  int dim() const { return static_cast<int>(dims.size()); }
  bool contains(const Point& p) const;
  LatticeWindow hull(const LatticeWindow& o) const;
  /// Central half of every axis.
  LatticeWindow middle_half() const;
  bool operator==(const LatticeWindow&) const = default;
};

/// Finite subset of Z^d kept as a lexicographically sorted, duplicate-free
/// point list. Sparse by design; boxes at desk scale hold few points.
class LatticeSet {
 public:
  LatticeSet(LatticeWindow w, std::vector<Point> pts);  // sorts + dedups, checks bounds
  LatticeSet() : LatticeSet(LatticeWindow::of({IntegerWindow::of(0, 0)}), {}) {}
  static LatticeSet empty(LatticeWindow w) { return LatticeSet(std::move(w), {}); }
  /// Hull window derived from the points (which must be nonempty).
  static LatticeSet from_points(std::vector<Point> pts);

  const LatticeWindow& window() const { return window_; }
  const std::vector<Point>& points() const { return points_; }
  int dim() const { return window_.dim(); }
  i64 size() const { return static_cast<i64>(points_.size()); }
  bool contains(const Point& p) const;

  LatticeSet negate() const;
  LatticeSet shift(const Point& c) const;
  LatticeSet clip(const LatticeWindow& w) const;

  bool operator==(const LatticeSet& o) const { return points_ == o.points_; }

 private:
  LatticeWindow window_;
  std::vector<Point> points_;
};

}  // namespace cominimal
