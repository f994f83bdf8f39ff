#include "cominimal/window.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace cominimal {

namespace {

i64 checked_add(i64 a, i64 b, const char* what) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw arithmetic_overflow_error(what);
  }
  return r;
}

}  // namespace

IntegerWindow IntegerWindow::of(i64 lo, i64 hi) {
  if (lo > hi) throw precondition_error("IntegerWindow: lo > hi");
  if (lo < 0 && hi > 0 && hi - std::numeric_limits<i64>::max() > lo - 1) {
    throw arithmetic_overflow_error("IntegerWindow: width overflows");
  }
  IntegerWindow w;
  w.lo = lo;
  w.hi = hi;
  return w;
}

IntegerWindow IntegerWindow::hull(const IntegerWindow& o) const {
  return of(std::min(lo, o.lo), std::max(hi, o.hi));
}

IntegerWindow IntegerWindow::shifted(i64 c) const {
  return of(checked_add(lo, c, "window shift overflows"),
            checked_add(hi, c, "window shift overflows"));
}

IntegerWindow IntegerWindow::negated() const {
  if (lo == std::numeric_limits<i64>::min() || hi == std::numeric_limits<i64>::min()) {
    throw arithmetic_overflow_error("window negation overflows");
  }
  return of(-hi, -lo);
}

WindowedSet::WindowedSet(IntegerWindow w) : window_(w) {
  if (w.width() > kMaxDenseWidth) {
    throw precondition_error("window too wide for a dense set");
  }
  words_.assign(static_cast<size_t>((w.width() + 63) / 64), 0);
}

WindowedSet WindowedSet::interval(IntegerWindow w) {
  WindowedSet s(w);
  std::fill(s.words_.begin(), s.words_.end(), ~u64(0));
  s.normalize_tail();
  return s;
}

WindowedSet WindowedSet::of_elements(std::span<const i64> elems) {
  if (elems.empty()) return WindowedSet(IntegerWindow::of(0, 0));
  i64 lo = elems[0], hi = elems[0];
  for (i64 e : elems) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  return of_elements(IntegerWindow::of(lo, hi), elems);
}

WindowedSet WindowedSet::of_elements(IntegerWindow w, std::span<const i64> elems) {
  WindowedSet s(w);
  for (i64 e : elems) s.add(e);
  return s;
}

WindowedSet WindowedSet::of_elements(std::initializer_list<i64> elems) {
  return of_elements(std::span<const i64>(elems.begin(), elems.size()));
}

WindowedSet WindowedSet::of_elements(IntegerWindow w, std::initializer_list<i64> elems) {
  return of_elements(w, std::span<const i64>(elems.begin(), elems.size()));
}

bool WindowedSet::contains(i64 x) const {
  if (!window_.contains(x)) return false;
  u64 idx = static_cast<u64>(x - window_.lo);
  return (words_[idx >> 6] >> (idx & 63)) & 1;
}

i64 WindowedSet::size() const {
  i64 n = 0;
  for (u64 w : words_) n += std::popcount(w);
  return n;
}

bool WindowedSet::empty() const {
  for (u64 w : words_) {
    if (w) return false;
  }
  return true;
}

i64 WindowedSet::min_element() const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) {
      return window_.lo + i64(i * 64 + std::countr_zero(words_[i]));
    }
  }
  throw precondition_error("min_element of empty set");
}

i64 WindowedSet::max_element() const {
  for (size_t i = words_.size(); i-- > 0;) {
    if (words_[i]) {
      return window_.lo + i64(i * 64 + 63 - std::countl_zero(words_[i]));
    }
  }
  throw precondition_error("max_element of empty set");
}

std::vector<i64> WindowedSet::elements() const {
  std::vector<i64> out;
  out.reserve(static_cast<size_t>(size()));
  for_each([&](i64 x) { out.push_back(x); });
  return out;
}

std::vector<std::pair<i64, i64>> WindowedSet::runs() const {
  std::vector<std::pair<i64, i64>> out;
  bool in_run = false;
  i64 start = 0, prev = 0;
  for_each([&](i64 x) {
    if (in_run && x == prev + 1) {
      prev = x;
      return;
    }
    if (in_run) out.emplace_back(start, prev - start + 1);
    in_run = true;
    start = prev = x;
  });
  if (in_run) out.emplace_back(start, prev - start + 1);
  return out;
}

void WindowedSet::for_each(const std::function<void(i64)>& fn) const {
  for (size_t i = 0; i < words_.size(); ++i) {
    u64 w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      fn(window_.lo + i64(i * 64 + b));
      w &= w - 1;
    }
  }
}

void WindowedSet::add(i64 x) {
  if (!window_.contains(x)) throw precondition_error("element outside window");
  u64 idx = static_cast<u64>(x - window_.lo);
  words_[idx >> 6] |= u64(1) << (idx & 63);
}

void WindowedSet::remove(i64 x) {
  if (!window_.contains(x)) return;
  u64 idx = static_cast<u64>(x - window_.lo);
  words_[idx >> 6] &= ~(u64(1) << (idx & 63));
}

WindowedSet WindowedSet::shift(i64 c) const {
  WindowedSet out(window_.shifted(c));
  out.words_ = words_;
  return out;
}

WindowedSet WindowedSet::negate() const {
  WindowedSet out(window_.negated());
  for_each([&](i64 x) { out.add(-x); });
  return out;
}

WindowedSet WindowedSet::rewindow(IntegerWindow w) const {
  WindowedSet out(w);
  for_each([&](i64 x) { out.add(x); });
  return out;
}

WindowedSet WindowedSet::clip(IntegerWindow w) const {
  WindowedSet out(w);
  for_each([&](i64 x) {
    if (w.contains(x)) out.add(x);
  });
  return out;
}

WindowedSet unite(const WindowedSet& a, const WindowedSet& b) {
  IntegerWindow h = a.window().hull(b.window());
  WindowedSet out = a.rewindow(h);
  b.for_each([&](i64 x) { out.add(x); });
  return out;
}

WindowedSet intersect(const WindowedSet& a, const WindowedSet& b) {
  IntegerWindow h = a.window().hull(b.window());
  WindowedSet out(h);
  a.for_each([&](i64 x) {
    if (b.contains(x)) out.add(x);
  });
  return out;
}

WindowedSet difference(const WindowedSet& a, const WindowedSet& b) {
  IntegerWindow h = a.window().hull(b.window());
  WindowedSet out(h);
  a.for_each([&](i64 x) {
    if (!b.contains(x)) out.add(x);
  });
  return out;
}

bool is_subset(const WindowedSet& a, const WindowedSet& b) {
  bool ok = true;
  a.for_each([&](i64 x) { ok = ok && b.contains(x); });
  return ok;
}

WindowedSet WindowedSet::half_or_quarter(Slice which) const {
  if (empty()) throw precondition_error("half_or_quarter: empty set");
  i64 a = min_element();
  i64 b = max_element();
  i64 width = b - a + 1;
  if (size() != width) {
    throw precondition_error("half_or_quarter: set is not a contiguous interval");
  }
  bool half = which == Slice::left_half || which == Slice::right_half;
  if (half && width % 2 != 0) {
    throw precondition_error("half_or_quarter: halves need even cardinality");
  }
  if (!half && width % 4 != 0) {
    throw precondition_error("half_or_quarter: quarters need cardinality divisible by 4");
  }
  i64 q = width / 4;
  IntegerWindow sub = window_;
  switch (which) {
    case Slice::left_half: sub = IntegerWindow::of(a, a - 1 + width / 2); break;
    case Slice::right_half: sub = IntegerWindow::of(a + width / 2, b); break;
    case Slice::q1: sub = IntegerWindow::of(a, a - 1 + q); break;
    case Slice::q2: sub = IntegerWindow::of(a + q, a - 1 + 2 * q); break;
    case Slice::q3: sub = IntegerWindow::of(a + 2 * q, a - 1 + 3 * q); break;
    case Slice::q4: sub = IntegerWindow::of(a + 3 * q, b); break;
  }
  return WindowedSet::interval(sub);
}

bool WindowedSet::same_elements(const WindowedSet& o) const {
  if (size() != o.size()) return false;
  bool ok = true;
  for_each([&](i64 x) { ok = ok && o.contains(x); });
  return ok;
}

bool WindowedSet::operator==(const WindowedSet& o) const {
  return same_elements(o);
}

void WindowedSet::normalize_tail() {
  i64 width = window_.width();
  int tail = static_cast<int>(width & 63);
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (u64(1) << tail) - 1;
  }
}

void WindowedSet::or_shifted(const WindowedSet& src, i64 delta) {
  if (&src == this) {
    WindowedSet copy = src;
    or_shifted(copy, delta);
    return;
  }
  // Destination bit of source bit i is base + i.
  i64 base;
  if (__builtin_add_overflow(src.window().lo, delta, &base)) {
    throw arithmetic_overflow_error("or_shifted: shift overflows");
  }
  base -= window_.lo;
  const i64 dst_bits = window_.width();
  const i64 src_bits = src.window().width();
  if (base >= dst_bits || base + src_bits <= 0) return;

  const auto& sw = src.words_;
  for (size_t i = 0; i < sw.size(); ++i) {
    u64 w = sw[i];
    if (!w) continue;
    i64 lobit = base + i64(i) * 64;  // dst bit of src word's bit 0
    if (lobit + 64 <= 0 || lobit >= dst_bits) continue;
    // Clip bits that fall outside the destination window.
    if (lobit < 0) {
      w >>= -lobit;
      lobit = 0;
      if (!w) continue;
      // After the shift the word is aligned at dst bit 0.
      words_[0] |= w;
      continue;
    }
    i64 q = lobit >> 6;
    int r = static_cast<int>(lobit & 63);
    words_[static_cast<size_t>(q)] |= w << r;
    if (r != 0 && static_cast<size_t>(q + 1) < words_.size()) {
      words_[static_cast<size_t>(q + 1)] |= w >> (64 - r);
    }
  }
  normalize_tail();
}

}  // namespace cominimal
