#include "cominimal/lattice_set.hpp"

#include <algorithm>

namespace cominimal {

LatticeWindow LatticeWindow::of(std::vector<IntegerWindow> dims) {
  if (dims.empty()) throw precondition_error("LatticeWindow: dimension must be >= 1");
  LatticeWindow w;
  w.dims = std::move(dims);
  return w;
}

bool LatticeWindow::contains(const Point& p) const {
  if (p.size() != dims.size()) return false;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (!dims[i].contains(p[i])) return false;
  }
  return true;
}

LatticeWindow LatticeWindow::hull(const LatticeWindow& o) const {
  if (dims.size() != o.dims.size()) {
    throw precondition_error("LatticeWindow::hull: dimension mismatch");
  }
  std::vector<IntegerWindow> d;
  d.reserve(dims.size());
  for (size_t i = 0; i < dims.size(); ++i) d.push_back(dims[i].hull(o.dims[i]));
  return of(std::move(d));
}

LatticeWindow LatticeWindow::middle_half() const {
  std::vector<IntegerWindow> d;
  d.reserve(dims.size());
  for (const auto& w : dims) {
    i64 quarter = w.width() / 4;
    d.push_back(IntegerWindow::of(w.lo + quarter, w.hi - quarter));
  }
  return of(std::move(d));
}

LatticeSet::LatticeSet(LatticeWindow w, std::vector<Point> pts)
    : window_(std::move(w)), points_(std::move(pts)) {
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != window_.dim()) {
      throw precondition_error("LatticeSet: point dimension mismatch");
    }
    if (!window_.contains(p)) {
      throw precondition_error("LatticeSet: point outside window");
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

LatticeSet LatticeSet::from_points(std::vector<Point> pts) {
  if (pts.empty()) throw precondition_error("LatticeSet::from_points: no points");
  size_t d = pts[0].size();
  std::vector<IntegerWindow> dims;
  for (size_t i = 0; i < d; ++i) {
    i64 lo = pts[0][i], hi = pts[0][i];
    for (const auto& p : pts) {
      if (p.size() != d) throw precondition_error("from_points: ragged point list");
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    dims.push_back(IntegerWindow::of(lo, hi));
  }
  return LatticeSet(LatticeWindow::of(std::move(dims)), std::move(pts));
}

bool LatticeSet::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

LatticeSet LatticeSet::negate() const {
  std::vector<Point> pts = points_;
  for (auto& p : pts) {
    for (auto& x : p) x = -x;
  }
  std::vector<IntegerWindow> dims;
  for (const auto& w : window_.dims) dims.push_back(w.negated());
  return LatticeSet(LatticeWindow::of(std::move(dims)), std::move(pts));
}

LatticeSet LatticeSet::shift(const Point& c) const {
  if (static_cast<int>(c.size()) != dim()) {
    throw precondition_error("LatticeSet::shift: dimension mismatch");
  }
  std::vector<Point> pts = points_;
  for (auto& p : pts) {
    for (size_t i = 0; i < p.size(); ++i) p[i] += c[i];
  }
  std::vector<IntegerWindow> dims;
  for (size_t i = 0; i < window_.dims.size(); ++i) dims.push_back(window_.dims[i].shifted(c[i]));
  return LatticeSet(LatticeWindow::of(std::move(dims)), std::move(pts));
}

LatticeSet LatticeSet::clip(const LatticeWindow& w) const {
  std::vector<Point> pts;
  for (const auto& p : points_) {
    if (w.contains(p)) pts.push_back(p);
  }
  return LatticeSet(w, std::move(pts));
}

}  // namespace cominimal
