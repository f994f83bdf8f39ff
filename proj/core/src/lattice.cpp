#include "cominimal/lattice.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace cominimal {

namespace {

i64 pow2(int k) { return i64(1) << k; }

struct PointHash {
  size_t operator()(const Point& p) const {
    u64 h = 0x9e3779b97f4a7c15ull;
    for (i64 v : p) {
      u64 x = static_cast<u64>(v);
      x ^= x >> 30;
      x *= 0xbf58476d1ce4e5b9ull;
      x ^= x >> 27;
      x *= 0x94d049bb133111ebull;
      x ^= x >> 31;
      h = (h ^ x) * 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

using PointSet = std::unordered_set<Point, PointHash>;

PointSet to_hash(const LatticeSet& s) {
  PointSet out;
  out.reserve(s.points().size() * 2);
  for (const auto& p : s.points()) out.insert(p);
  return out;
}

Point add(const Point& a, const Point& b) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point sub(const Point& a, const Point& b) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

i64 max_abs(const Point& p) {
  i64 m = 0;
  for (i64 v : p) m = std::max(m, v < 0 ? -v : v);
  return m;
}

void odometer(const LatticeWindow& w, const std::function<bool(const Point&)>& fn) {
  i64 total = 1;
  for (const auto& d : w.dims) {
    if (d.width() > (i64(1) << 22) || total > (i64(1) << 22) / d.width()) {
      throw precondition_error("lattice verification region too large");
    }
    total *= d.width();
  }
  Point p;
  p.reserve(w.dims.size());
  for (const auto& d : w.dims) p.push_back(d.lo);
  while (true) {
    if (!fn(p)) return;
    int i = static_cast<int>(p.size()) - 1;
    while (i >= 0) {
      if (p[static_cast<size_t>(i)] < w.dims[static_cast<size_t>(i)].hi) {
        ++p[static_cast<size_t>(i)];
        break;
      }
      p[static_cast<size_t>(i)] = w.dims[static_cast<size_t>(i)].lo;
      --i;
    }
    if (i < 0) return;
  }
}

i64 default_magnitude(const LatticeWindow& box) {
  LatticeWindow mh = box.middle_half();
  i64 r = 1;
  for (const auto& d : mh.dims) r = std::max({r, d.hi < 0 ? -d.hi : d.hi, d.lo < 0 ? -d.lo : d.lo});
  return std::max<i64>(16 * r, 64);
}

std::vector<i64> refined_prefix_elements(FamilyKind base, i64 magnitude) {
  FamilySpec plain = base == FamilyKind::S ? FamilySpec::S() : FamilySpec::U();
  IntegerWindow w = IntegerWindow::of(-magnitude, -1);
  int budget = static_cast<int>(materialize(plain, w).size());
  FamilySpec refined = base == FamilyKind::S ? FamilySpec::script_S(budget)
                                             : FamilySpec::script_U(budget);
  return materialize(refined, w).elements();
}

std::vector<i64> power_prefix(i64 magnitude, bool both_signs) {
  std::vector<i64> out;
  for (int k = 0; pow2(k) <= magnitude; ++k) {
    if (both_signs) out.push_back(-pow2(k));
    out.push_back(pow2(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticeSet grid2(const std::vector<i64>& xs, const std::vector<i64>& ys) {
  std::vector<Point> pts;
  pts.reserve(xs.size() * ys.size());
  for (i64 x : xs) {
    for (i64 y : ys) pts.push_back({x, y});
  }
  return LatticeSet::from_points(std::move(pts));
}

std::vector<i64> negated(std::vector<i64> v) {
  for (auto& x : v) x = -x;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

IntMatrix IntMatrix::from_rows(std::vector<std::vector<i64>> rows) {
  IntMatrix m;
  m.entries = std::move(rows);
  for (const auto& r : m.entries) {
    if (r.size() != m.entries.size()) throw precondition_error("IntMatrix: not square");
  }
  if (m.entries.empty()) throw precondition_error("IntMatrix: empty");
  return m;
}

i64 IntMatrix::det() const {
  // Bareiss fraction-free elimination; exact for desk-scale entries.
  int n = dim();
  std::vector<std::vector<i64>> a = entries;
  i64 sign = 1;
  i64 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Point IntMatrix::apply(const Point& p) const {
  if (static_cast<int>(p.size()) != dim()) {
    throw precondition_error("IntMatrix::apply: dimension mismatch");
  }
  Point out(p.size(), 0);
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) out[static_cast<size_t>(i)] += entries[i][j] * p[j];
  }
  return out;
}

bool is_two_nonzero_gl2(const IntMatrix& m) {
  if (m.dim() != 2) throw precondition_error("is_two_nonzero_gl2: matrix must be 2x2");
  int zeros = 0;
  for (const auto& row : m.entries) {
    for (i64 v : row) {
      if (v == 0) ++zeros;
    }
  }
  if (zeros != 2) return false;
  i64 d = m.det();
  return d == 1 || d == -1;
}

Block Block::identity() { return Block{}; }

Block Block::two(IntMatrix m) {
  if (!is_two_nonzero_gl2(m)) {
    throw precondition_error("Block::two: matrix must be a signed coordinate permutation");
  }
  Block b;
  b.kind = Kind::two_by_two;
  b.m = std::move(m);
  return b;
}

int BlockTriangularSpec::dim() const {
  int d = 0;
  for (const auto& b : blocks) d += b.dim();
  return d;
}

IntMatrix BlockTriangularSpec::to_matrix() const {
  int n = dim();
  std::vector<std::vector<i64>> rows(static_cast<size_t>(n), std::vector<i64>(static_cast<size_t>(n), 0));
  int off = 0;
  for (const auto& b : blocks) {
    if (b.kind == Block::Kind::identity1) {
      rows[static_cast<size_t>(off)][static_cast<size_t>(off)] = 1;
    } else {
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          rows[static_cast<size_t>(off + i)][static_cast<size_t>(off + j)] = b.m.entries[i][j];
        }
      }
    }
    off += b.dim();
  }
  for (const auto& [rc, v] : above) {
    auto [r, c] = rc;
    if (r < 0 || c <= r || c >= n) {
      throw precondition_error("BlockTriangularSpec: above-diagonal entry out of range");
    }
    rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
  }
  return IntMatrix::from_rows(std::move(rows));
}

LatticePairReport verify_cominimal_lattice(const LatticeSet& a, const LatticeSet& b,
                                           const LatticeWindow& box) {
  if (a.dim() != b.dim() || a.dim() != box.dim()) {
    throw precondition_error("verify_cominimal_lattice: dimension mismatch");
  }
  LatticePairReport rep;
  rep.a = a;
  rep.b = b;
  rep.certification = Certification::window_only;

  PointSet ah = to_hash(a);
  PointSet bh = to_hash(b);
  LatticeWindow mh = box.middle_half();

  rep.coverage_ok = true;
  odometer(mh, [&](const Point& y) {
    for (const auto& q : b.points()) {
      if (ah.count(sub(y, q))) return true;
    }
    rep.coverage_ok = false;
    rep.first_uncovered = y;
    return false;
  });

  // One lost target per element of either side inside the middle half.
  // A target is lost when every representation of it goes through the
  // element; representation scans run over the smaller point list.
  const bool scan_b = b.points().size() <= a.points().size();

  auto find_witness = [&](const Point& elem, bool elem_in_a) -> std::optional<Point> {
    const auto& partners = elem_in_a ? b.points() : a.points();
    std::vector<Point> candidates;
    candidates.reserve(partners.size());
    for (const auto& q : partners) candidates.push_back(add(elem, q));
    std::sort(candidates.begin(), candidates.end(), [](const Point& l, const Point& r) {
      return std::make_pair(max_abs(l), l) < std::make_pair(max_abs(r), r);
    });
    for (const auto& y : candidates) {
      bool alt = false;
      bool self = false;
      if (scan_b) {
        for (const auto& q2 : b.points()) {
          Point a2 = sub(y, q2);
          if (!ah.count(a2)) continue;
          const Point& side = elem_in_a ? a2 : q2;
          if (side == elem) {
            self = true;
          } else {
            alt = true;
            break;
          }
        }
      } else {
        for (const auto& a2 : a.points()) {
          Point q2 = sub(y, a2);
          if (!bh.count(q2)) continue;
          const Point& side = elem_in_a ? a2 : q2;
          if (side == elem) {
            self = true;
          } else {
            alt = true;
            break;
          }
        }
      }
      if (!alt && self) return y;
    }
    return std::nullopt;
  };

  for (const auto& p : a.points()) {
    if (!mh.contains(p)) continue;
    if (auto y = find_witness(p, true)) {
      rep.a_witnesses.emplace_back(p, *y);
    } else {
      rep.a_unwitnessed.push_back(p);
    }
  }
  for (const auto& q : b.points()) {
    if (!mh.contains(q)) continue;
    if (auto y = find_witness(q, false)) {
      rep.b_witnesses.emplace_back(q, *y);
    } else {
      rep.b_unwitnessed.push_back(q);
    }
  }
  return rep;
}

std::pair<LatticeSet, LatticeSet> product_pair(const WindowedSet& a, const WindowedSet& b,
                                               const LatticeSet& c, const LatticeSet& d,
                                               int embedding_axis) {
  int dims = c.dim();
  if (d.dim() != dims) throw precondition_error("product_pair: dimension mismatch");
  if (embedding_axis < 0 || embedding_axis >= dims) {
    throw precondition_error("product_pair: embedding axis out of range");
  }

  auto check_bijective = [&](const LatticeSet& x, const char* side) {
    std::set<Point> proj;
    for (const auto& p : x.points()) {
      Point q;
      q.reserve(p.size() - 1);
      for (size_t i = 0; i < p.size(); ++i) {
        if (static_cast<int>(i) != embedding_axis) q.push_back(p[i]);
      }
      if (!proj.insert(q).second) {
        throw precondition_error(std::string("product_pair: projection of ") + side +
                                 " is not injective away from the embedding axis");
      }
    }
  };
  check_bijective(c, "c");
  check_bijective(d, "d");

  auto lift = [&](const WindowedSet& line, const LatticeSet& cross) {
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(line.size()) * cross.points().size());
    line.for_each([&](i64 x) {
      for (const auto& p : cross.points()) {
        Point q = p;
        q[static_cast<size_t>(embedding_axis)] += x;
        pts.push_back(std::move(q));
      }
    });
    return LatticeSet::from_points(std::move(pts));
  };
  return {lift(a, c), lift(b, d)};
}

PlanarPairs corollary_pairs(const std::vector<i64>& x_seq, const std::vector<i64>& y_seq,
                            const LatticeWindow& w, const PrefixOptions& opt) {
  if (w.dim() != 2) throw precondition_error("corollary_pairs: window must be planar");
  i64 mag = opt.magnitude > 0 ? opt.magnitude : default_magnitude(w);
  std::vector<i64> sp = refined_prefix_elements(FamilyKind::S, mag);
  std::sort(sp.begin(), sp.end(), [](i64 l, i64 r) { return -l < -r; });  // by magnitude
  std::vector<i64> tp;
  for (int k = 0; pow2(k) <= mag; ++k) tp.push_back(pow2(k));

  auto seq_at = [](const std::vector<i64>& seq, size_t i) {
    return i < seq.size() ? seq[i] : i64(0);
  };
  // Row shifts index the refined prefix (x) and the power prefix (y); an
  // empty sequence means all zeros.
  if (!x_seq.empty() && x_seq.size() < sp.size()) {
    throw precondition_error("corollary_pairs: x sequence shorter than the refined prefix");
  }
  if (!y_seq.empty() && y_seq.size() < tp.size()) {
    throw precondition_error("corollary_pairs: y sequence shorter than the power prefix");
  }

  auto shifted_grid = [&](const std::vector<i64>& firsts, const std::vector<i64>& seconds,
                          const std::vector<i64>& shifts_src) {
    std::vector<Point> pts;
    pts.reserve(firsts.size() * seconds.size());
    for (size_t i = 0; i < seconds.size(); ++i) {
      i64 shift = seq_at(shifts_src, i);
      for (i64 f : firsts) pts.push_back({shift + f, seconds[i]});
    }
    return LatticeSet::from_points(std::move(pts));
  };

  PlanarPairs out{
      {shifted_grid(sp, sp, x_seq), shifted_grid(tp, tp, y_seq)},
      {shifted_grid(tp, sp, x_seq), shifted_grid(sp, tp, y_seq)},
  };
  return out;
}

namespace {

// Per-block factor set for the eight signed coordinate permutations, in the
// fixed listed order. The two axis-cross sets omit the origin: it has no
// lost target (every target it serves keeps another representation), so
// including it would break exact minimality verification.
LatticeSet two_block_factor(const IntMatrix& m, IntegerWindow wx, IntegerWindow wy, i64 mag) {
  auto is = [&](i64 a, i64 b, i64 c, i64 d) {
    return m.entries[0][0] == a && m.entries[0][1] == b && m.entries[1][0] == c &&
           m.entries[1][1] == d;
  };
  auto sym = [](IntegerWindow w) {
    i64 h = std::min(-w.lo, w.hi);
    if (h < 4) throw precondition_error("axis window too small for a symmetric basis");
    return IntegerWindow::of(-h, h);
  };

  if (is(1, 0, 0, 1) || is(-1, 0, 0, -1)) {
    std::vector<i64> wx_elems = materialize(FamilySpec::W(sym(wx)), sym(wx)).elements();
    std::vector<i64> wy_elems = materialize(FamilySpec::W(sym(wy)), sym(wy)).elements();
    return grid2(wx_elems, wy_elems);
  }
  if (is(1, 0, 0, -1)) {
    std::vector<Point> pts;
    for (i64 x = wx.lo; x <= wx.hi; ++x) {
      if (x != 0) pts.push_back({x, 0});
    }
    for (i64 y = 1; y <= wy.hi; ++y) pts.push_back({0, y});
    return LatticeSet::from_points(std::move(pts));
  }
  if (is(-1, 0, 0, 1)) {
    std::vector<Point> pts;
    for (i64 x = 1; x <= wx.hi; ++x) pts.push_back({x, 0});
    for (i64 y = wy.lo; y <= wy.hi; ++y) {
      if (y != 0) pts.push_back({0, y});
    }
    return LatticeSet::from_points(std::move(pts));
  }

  std::vector<i64> sp = refined_prefix_elements(FamilyKind::S, mag);
  std::vector<i64> up = refined_prefix_elements(FamilyKind::U, mag);
  std::vector<i64> tp = power_prefix(mag, false);
  std::vector<i64> vp = power_prefix(mag, true);

  if (is(0, 1, 1, 0)) return grid2(sp, tp);
  if (is(0, -1, 1, 0)) return grid2(vp, up);
  if (is(0, 1, -1, 0)) return grid2(up, vp);
  if (is(0, -1, -1, 0)) return grid2(negated(sp), tp);
  throw precondition_error("two_block_factor: unsupported block matrix");
}

}  // namespace

LatticeSet build_A_for_automorphism(const BlockTriangularSpec& spec, const LatticeWindow& w,
                                    const PrefixOptions& opt) {
  if (spec.dim() != w.dim()) {
    throw precondition_error("build_A_for_automorphism: window dimension mismatch");
  }
  i64 mag = opt.magnitude > 0 ? opt.magnitude : default_magnitude(w);

  // Entries above the block diagonal shear box targets by multiples of the
  // coupled axes, so the per-axis factor reach must grow with the shear
  // load for windowed coverage to stay achievable.
  std::vector<i64> shear_load(static_cast<size_t>(w.dim()), 0);
  for (const auto& [rc, v] : spec.above) {
    auto [r, c] = rc;
    IntegerWindow cw = w.dims[static_cast<size_t>(c)];
    i64 ch = std::max(cw.hi < 0 ? -cw.hi : cw.hi, cw.lo < 0 ? -cw.lo : cw.lo);
    shear_load[static_cast<size_t>(r)] += (v < 0 ? -v : v) * ch;
  }

  std::vector<std::vector<Point>> factor_points;
  int axis = 0;
  for (const auto& blk : spec.blocks) {
    i64 load = 0;
    for (int i = 0; i < blk.dim(); ++i) load = std::max(load, shear_load[static_cast<size_t>(axis + i)]);
    if (blk.kind == Block::Kind::identity1) {
      IntegerWindow aw = w.dims[static_cast<size_t>(axis)];
      i64 h = std::min(-aw.lo, aw.hi);
      if (h < 4) throw precondition_error("identity block axis window too small");
      h += 2 * load;
      WindowedSet basis = materialize(FamilySpec::W(IntegerWindow::of(-h, h)),
                                      IntegerWindow::of(-h, h));
      std::vector<Point> pts;
      basis.for_each([&](i64 x) { pts.push_back({x}); });
      factor_points.push_back(std::move(pts));
    } else {
      LatticeSet f = two_block_factor(blk.m, w.dims[static_cast<size_t>(axis)],
                                      w.dims[static_cast<size_t>(axis + 1)], mag + 16 * load);
      factor_points.push_back(f.points());
    }
    axis += blk.dim();
  }

  // Cartesian product across blocks.
  std::vector<Point> pts = {{}};
  for (const auto& fp : factor_points) {
    if (pts.size() * fp.size() > (size_t(1) << 21)) {
      throw precondition_error("build_A_for_automorphism: product too large");
    }
    std::vector<Point> next;
    next.reserve(pts.size() * fp.size());
    for (const auto& head : pts) {
      for (const auto& tail : fp) {
        Point p = head;
        p.insert(p.end(), tail.begin(), tail.end());
        next.push_back(std::move(p));
      }
    }
    pts = std::move(next);
  }
  return LatticeSet::from_points(std::move(pts));
}

bool is_in_quadrant(const LatticeSet& x) {
  if (x.points().empty()) throw precondition_error("is_in_quadrant: empty set");
  for (int axis = 0; axis < x.dim(); ++axis) {
    int sign = 0;
    for (const auto& p : x.points()) {
      i64 v = p[static_cast<size_t>(axis)];
      if (v == 0) return false;
      int s = v > 0 ? 1 : -1;
      if (sign == 0) {
        sign = s;
      } else if (sign != s) {
        return false;
      }
    }
  }
  return true;
}

LatticePairReport verify_product_pair(const std::vector<std::pair<LatticeSet, LatticeSet>>& factors,
                                      const LatticeWindow& box) {
  int total = 0;
  for (const auto& [fa, fb] : factors) {
    if (fa.dim() != fb.dim()) throw precondition_error("verify_product_pair: factor dims differ");
    total += fa.dim();
  }
  if (total != box.dim()) throw precondition_error("verify_product_pair: box dimension mismatch");

  // Verify factors on their own axes.
  std::vector<LatticePairReport> freps;
  int axis = 0;
  for (const auto& [fa, fb] : factors) {
    std::vector<IntegerWindow> dims(box.dims.begin() + axis, box.dims.begin() + axis + fa.dim());
    freps.push_back(verify_cominimal_lattice(fa, fb, LatticeWindow::of(dims)));
    axis += fa.dim();
  }

  auto compose_sets = [&](bool first_side) {
    std::vector<Point> pts = {{}};
    for (const auto& [fa, fb] : factors) {
      const auto& src = first_side ? fa.points() : fb.points();
      if (pts.size() * src.size() > (size_t(1) << 21)) {
        throw precondition_error("verify_product_pair: product too large");
      }
      std::vector<Point> next;
      next.reserve(pts.size() * src.size());
      for (const auto& head : pts) {
        for (const auto& tail : src) {
          Point p = head;
          p.insert(p.end(), tail.begin(), tail.end());
          next.push_back(std::move(p));
        }
      }
      pts = std::move(next);
    }
    return LatticeSet::from_points(std::move(pts));
  };

  LatticePairReport rep;
  rep.a = compose_sets(true);
  rep.b = compose_sets(false);
  rep.certification = Certification::window_only;
  rep.coverage_ok = true;
  for (const auto& fr : freps) {
    if (!fr.coverage_ok) {
      rep.coverage_ok = false;
      rep.first_uncovered = fr.first_uncovered;
    }
  }

  // A removed product element loses the concatenation of its per-factor
  // lost targets: any alternative representation of the composed target
  // would yield an alternative in some factor.
  auto compose_witnesses = [&](bool first_side) {
    std::vector<std::map<Point, Point>> maps;
    std::vector<std::set<Point>> missing;
    for (const auto& fr : freps) {
      std::map<Point, Point> m;
      for (const auto& [e, y] : first_side ? fr.a_witnesses : fr.b_witnesses) m[e] = y;
      std::set<Point> miss;
      for (const auto& e : first_side ? fr.a_unwitnessed : fr.b_unwitnessed) miss.insert(e);
      maps.push_back(std::move(m));
      missing.push_back(std::move(miss));
    }
    std::vector<std::pair<Point, Point>> witnesses;
    std::vector<Point> unwitnessed;
    const LatticeSet& composed = first_side ? rep.a : rep.b;
    LatticeWindow mh = box.middle_half();
    for (const auto& p : composed.points()) {
      if (!mh.contains(p)) continue;
      Point target;
      bool ok = true;
      int off = 0;
      for (size_t f = 0; f < factors.size(); ++f) {
        int d = first_side ? factors[f].first.dim() : factors[f].second.dim();
        Point comp(p.begin() + off, p.begin() + off + d);
        auto it = maps[f].find(comp);
        if (it == maps[f].end()) {
          ok = false;
          break;
        }
        target.insert(target.end(), it->second.begin(), it->second.end());
        off += d;
      }
      if (ok) {
        witnesses.emplace_back(p, target);
      } else {
        unwitnessed.push_back(p);
      }
    }
    if (first_side) {
      rep.a_witnesses = std::move(witnesses);
      rep.a_unwitnessed = std::move(unwitnessed);
    } else {
      rep.b_witnesses = std::move(witnesses);
      rep.b_unwitnessed = std::move(unwitnessed);
    }
  };
  compose_witnesses(true);
  compose_witnesses(false);
  return rep;
}

LatticePairReport build_quadrant_pair(int d, const LatticeWindow& w, const PrefixOptions& opt) {
  if (d < 1) throw precondition_error("build_quadrant_pair: d must be >= 1");
  if (w.dim() != 2 * d) throw precondition_error("build_quadrant_pair: window dimension != 2d");
  i64 mag = opt.magnitude > 0 ? opt.magnitude : default_magnitude(w);

  std::vector<i64> sp = refined_prefix_elements(FamilyKind::S, mag);
  std::vector<i64> tp = power_prefix(mag, false);
  LatticeSet factor_a = grid2(negated(sp), tp);
  LatticeSet factor_b = grid2(negated(tp), sp);  // image under (x,y) -> (-y,-x)

  std::vector<std::pair<LatticeSet, LatticeSet>> factors(static_cast<size_t>(d),
                                                         {factor_a, factor_b});
  return verify_product_pair(factors, w);
}

}  // namespace cominimal
