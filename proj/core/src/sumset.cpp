#include "cominimal/sumset.hpp"

#include <algorithm>

#include "cominimal/runtime.hpp"

namespace cominimal {

namespace {

i64 pow2(int k) { return i64(1) << k; }

WindowedSet sumset_chunk(const WindowedSet& big, const WindowedSet& small, IntegerWindow target) {
  WindowedSet out(target);
  small.for_each([&](i64 e) { out.or_shifted(big, e); });
  return out;
}

bool is_power_partner(const FamilySpec& f) {
  return f.kind == FamilyKind::T || f.kind == FamilyKind::V;
}

}  // namespace

WindowedSet sumset(const WindowedSet& a, const WindowedSet& b, IntegerWindow target) {
  const WindowedSet& big = a.size() >= b.size() ? a : b;
  const WindowedSet& small = a.size() >= b.size() ? b : a;
  if (small.empty()) return WindowedSet(target);

  const int threads = thread_cap();
  const i64 width = target.width();
  if (threads <= 1 || width < (i64(1) << 17)) {
    return sumset_chunk(big, small, target);
  }

  // Chunk boundaries depend only on the target, so the merged result is
  // identical to the single-threaded one.
  i64 chunks = std::min<i64>(threads, (width + (i64(1) << 16) - 1) >> 16);
  i64 per = (width + chunks - 1) / chunks;
  per = ((per + 63) / 64) * 64;  // word-aligned relative to target.lo
  std::vector<WindowedSet> parts;
  parts.reserve(static_cast<size_t>(chunks));
  std::vector<IntegerWindow> part_windows;
  for (i64 i = 0; i < chunks; ++i) {
    i64 lo = target.lo + i * per;
    if (lo > target.hi) break;
    i64 hi = std::min(target.hi, lo + per - 1);
    part_windows.push_back(IntegerWindow::of(lo, hi));
    parts.emplace_back(IntegerWindow::of(lo, hi));
  }
  parallel_for(static_cast<i64>(part_windows.size()), [&](i64 i) {
    parts[static_cast<size_t>(i)] = sumset_chunk(big, small, part_windows[static_cast<size_t>(i)]);
  });
  WindowedSet out(target);
  for (const auto& part : parts) {
    out.or_shifted(part, 0);
  }
  return out;
}

LatticeSet sumset_lattice(const LatticeSet& a, const LatticeSet& b, const LatticeWindow& box) {
  if (a.dim() != b.dim() || a.dim() != box.dim()) {
    throw precondition_error("sumset_lattice: dimension mismatch");
  }
  std::vector<Point> pts;
  for (const auto& p : a.points()) {
    for (const auto& q : b.points()) {
      Point s(p.size());
      for (size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
      if (box.contains(s)) pts.push_back(std::move(s));
    }
  }
  return LatticeSet(box, std::move(pts));
}

int default_horizon(i64 y) {
  return bit_length(y < 0 ? -y : y) + default_config().representation_horizon_slack;
}

RepresentationReport representations_filtered(i64 y, const FamilySpec& base,
                                              const std::vector<i64>& removed,
                                              std::optional<i64> also_excluded,
                                              const FamilySpec& partner, int horizon_k,
                                              TailPolicy tail_policy) {
  const FamilySpec* A = &base;
  const FamilySpec* B = &partner;
  if (is_power_partner(*A) && !is_power_partner(*B)) std::swap(A, B);
  if (!is_power_partner(*B)) {
    throw precondition_error("representations: partner must be T or V");
  }
  // Completeness for partner V needs every admissible |b| enumerated: base
  // members sit in magnitude bands capped once 2^{n-3} > |y|, which bounds
  // the exponent by bit_length(|y|) + 3. Anything at or above that is
  // admissible (the stated defaults add further slack).
  if (horizon_k < std::max(6, bit_length(y < 0 ? -y : y) + 3)) {
    throw precondition_error("representations: horizon too small for target");
  }
  if (horizon_k > 60) throw precondition_error("representations: horizon too large");

  auto in_base = [&](i64 x) {
    if (also_excluded && x == *also_excluded) return false;
    if (std::binary_search(removed.begin(), removed.end(), x)) return false;
    return member(*A, x);
  };

  RepresentationReport rep;
  rep.y = y;
  rep.horizon = horizon_k;
  const bool both_signs = B->kind == FamilyKind::V;
  if (both_signs) {
    for (int k = horizon_k; k >= 0; --k) {
      i64 b = -pow2(k);
      if (in_base(y - b)) rep.pairs.emplace_back(y - b, b);
    }
  }
  for (int k = 0; k <= horizon_k; ++k) {
    i64 b = pow2(k);
    if (in_base(y - b)) rep.pairs.emplace_back(y - b, b);
  }

  if (both_signs || tail_policy == TailPolicy::skip) {
    // For partner V the list is complete: members of the base lie in bands
    // whose magnitude is capped once 2^{horizon-3} > |y|, so no pair beyond
    // the horizon exists. Under TailPolicy::skip the field is left as none
    // without a scan.
    rep.tail.kind = RepTail::Kind::none;
  } else {
    // Stabilized scan beyond the horizon. The same mask applies: a tail
    // representation through a masked-out element must not count.
    const int k0 = horizon_k + 1;
    const int span = default_config().tail_span;
    if (k0 + span > 62) throw precondition_error("representations: tail exponents too large");
    bool first = in_base(y - pow2(k0));
    for (int k = k0 + 1; k <= k0 + span; ++k) {
      if (in_base(y - pow2(k)) != first) {
        throw stabilization_error("representations: tail not constant beyond horizon (y=" +
                                  std::to_string(y) + ")");
      }
    }
    if (first) {
      rep.tail.kind = RepTail::Kind::infinite;
      rep.tail.verdict.value = true;
      rep.tail.verdict.checked_span = span;
      // Report the earliest exponent from which membership persists.
      int kk = k0;
      while (kk > 1 && in_base(y - pow2(kk - 1))) --kk;
      rep.tail.verdict.k0 = kk;
      rep.tail.desc = "membership of y - 2^k persists for all scanned k >= " +
                      std::to_string(kk) + "; the pair family continues";
    } else {
      rep.tail.kind = RepTail::Kind::none;
    }
  }
  return rep;
}

RepresentationReport representations(i64 y, const FamilySpec& base, const FamilySpec& partner,
                                     int horizon_k) {
  return representations_filtered(y, base, {}, std::nullopt, partner, horizon_k);
}

}  // namespace cominimal
