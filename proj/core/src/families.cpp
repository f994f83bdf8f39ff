#include "cominimal/families.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "cominimal/refine.hpp"

namespace cominimal {

namespace {

constexpr int kMaxGenIndex = 26;   // materialized layers stay below 2^26 elements
constexpr i64 kMaxAbsMember = i64(1) << 60;

i64 pow2(int k) { return i64(1) << k; }

void require_index(int n) {
  if (n < 0) throw precondition_error("family index must be >= 0");
  if (n > kMaxGenIndex) throw precondition_error("family index too large to materialize");
}

bool member_J(int n, i64 x) {
  while (true) {
    if (x < 1) return false;
    if (n <= 1) return x == 1;
    if (x <= pow2(n - 2)) return true;
    x -= pow2(n - 1);
    --n;
  }
}

bool member_K(int n, i64 x) {
  if (n <= 1) return x == 1;
  if (n == 2) return x == 3;
  i64 q = pow2(n - 3);
  if (x > q && x <= 2 * q) return true;
  return member_J(n - 2, x - 6 * q);
}

bool member_I(int n, i64 x) { return member_K(n, x + 1 + pow2(n + 1)); }

bool member_script_I(int n, i64 x) {
  if (n == 0) return x == -2 || x == -1;
  return x >= -pow2(n + 1) && x <= -(pow2(n) + 1);
}

bool member_S(i64 x) {
  if (x >= -1) return false;
  if (x == -2) return true;
  if (x < -kMaxAbsMember) throw precondition_error("member: |x| too large");
  return member_I(band_index(x), x);
}

bool member_U_layer(int n, i64 x) {
  switch (n) {
    case 0: return x == -2 || x == -1;
    case 1:
    case 2: return false;
    case 3: return x == 6 - (1 + pow2(4));
    case 4: return x == 3 - 33 || x == 4 - 33 || x == 14 - 33;
    default: {
      i64 y = x + 1 + pow2(n + 1);
      i64 q = pow2(n - 3);
      return (y > q && y <= 2 * q) || (y > 6 * q && y <= 6 * q + q / 2);
    }
  }
}

bool member_U(i64 x) {
  if (x >= 0) return false;
  if (x == -2 || x == -1) return true;
  if (x < -kMaxAbsMember) throw precondition_error("member: |x| too large");
  return member_U_layer(band_index(x), x);
}

bool member_T(i64 x) { return x >= 1 && std::has_single_bit(static_cast<u64>(x)); }

bool member_V(i64 x) {
  if (x == 0) return false;
  u64 a = static_cast<u64>(x < 0 ? -x : x);
  return std::has_single_bit(a);
}

// Refined prefixes are memoized: the greedy pass is deterministic, so one
// computation per (kind,budget) serves every membership query.
const RefinementResult& prefix_result(FamilyKind kind, int budget) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<RefinementResult>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(kind), budget);
  auto it = cache.find(key);
  if (it == cache.end()) {
    FamilySpec base = kind == FamilyKind::ScriptS ? FamilySpec::S() : FamilySpec::U();
    FamilySpec partner = kind == FamilyKind::ScriptS ? FamilySpec::T() : FamilySpec::V();
    auto res = std::make_unique<RefinementResult>(
        refine_greedy(base, partner, budget, IntegerWindow::of(-pow2(40), pow2(40))));
    it = cache.emplace(key, std::move(res)).first;
  }
  return *it->second;
}

const WindowedSet& w_greedy_cached(IntegerWindow w) {
  static std::mutex mu;
  static std::map<std::pair<i64, i64>, std::unique_ptr<WindowedSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(w.lo, w.hi);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<WindowedSet>(gen_W_greedy(w))).first;
  }
  return *it->second;
}

}  // namespace

FamilySpec FamilySpec::J(int n) { FamilySpec f; f.kind = FamilyKind::J; f.n = n; return f; }
FamilySpec FamilySpec::K(int n) { FamilySpec f; f.kind = FamilyKind::K; f.n = n; return f; }
FamilySpec FamilySpec::I(int n) { FamilySpec f; f.kind = FamilyKind::I; f.n = n; return f; }
FamilySpec FamilySpec::script_I(int n) {
  FamilySpec f;
  f.kind = FamilyKind::ScriptI;
  f.n = n;
  return f;
}
FamilySpec FamilySpec::S() { FamilySpec f; f.kind = FamilyKind::S; return f; }
FamilySpec FamilySpec::T() { FamilySpec f; f.kind = FamilyKind::T; return f; }
FamilySpec FamilySpec::U() { FamilySpec f; f.kind = FamilyKind::U; return f; }
FamilySpec FamilySpec::V() { FamilySpec f; f.kind = FamilyKind::V; return f; }
FamilySpec FamilySpec::script_S(int budget) {
  if (budget < 0) throw precondition_error("prefix budget must be >= 0");
  FamilySpec f;
  f.kind = FamilyKind::ScriptS;
  f.budget = budget;
  return f;
}
FamilySpec FamilySpec::script_U(int budget) {
  if (budget < 0) throw precondition_error("prefix budget must be >= 0");
  FamilySpec f;
  f.kind = FamilyKind::ScriptU;
  f.budget = budget;
  return f;
}
FamilySpec FamilySpec::W(IntegerWindow w) {
  FamilySpec f;
  f.kind = FamilyKind::W;
  f.w_window = w;
  return f;
}
FamilySpec FamilySpec::negated(FamilySpec base) {
  FamilySpec f;
  f.kind = FamilyKind::Negated;
  f.base = std::make_shared<FamilySpec>(std::move(base));
  return f;
}
FamilySpec FamilySpec::shifted(FamilySpec base, i64 c) {
  FamilySpec f;
  f.kind = FamilyKind::Shifted;
  f.base = std::make_shared<FamilySpec>(std::move(base));
  f.c = c;
  return f;
}
FamilySpec FamilySpec::minus(FamilySpec base, std::vector<i64> drop) {
  FamilySpec f;
  f.kind = FamilyKind::Minus;
  f.base = std::make_shared<FamilySpec>(std::move(base));
  f.drop = std::move(drop);
  std::sort(f.drop.begin(), f.drop.end());
  return f;
}
FamilySpec FamilySpec::product(std::vector<FamilySpec> factors) {
  if (factors.empty()) throw precondition_error("product needs at least one factor");
  FamilySpec f;
  f.kind = FamilyKind::Product;
  f.factors = std::move(factors);
  return f;
}

std::string FamilySpec::describe() const {
  switch (kind) {
    case FamilyKind::J: return "J:" + std::to_string(n);
    case FamilyKind::K: return "K:" + std::to_string(n);
    case FamilyKind::I: return "I:" + std::to_string(n);
    case FamilyKind::ScriptI: return "SI:" + std::to_string(n);
    case FamilyKind::S: return "S";
    case FamilyKind::T: return "T";
    case FamilyKind::U: return "U";
    case FamilyKind::V: return "V";
    case FamilyKind::ScriptS: return "SS:" + std::to_string(budget);
    case FamilyKind::ScriptU: return "SU:" + std::to_string(budget);
    case FamilyKind::W:
      return "W[" + std::to_string(w_window.lo) + ".." + std::to_string(w_window.hi) + "]";
    case FamilyKind::Negated: return "neg(" + base->describe() + ")";
    case FamilyKind::Shifted:
      return "shift(" + base->describe() + "," + std::to_string(c) + ")";
    case FamilyKind::Minus: {
      std::string s = "minus(" + base->describe() + ",{";
      for (size_t i = 0; i < drop.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(drop[i]);
      }
      return s + "})";
    }
    case FamilyKind::Product: {
      std::string s = "product(";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ",";
        s += factors[i].describe();
      }
      return s + ")";
    }
  }
  return "?";
}

int bit_length(i64 v) {
  if (v < 0) throw precondition_error("bit_length of negative value");
  return std::bit_width(static_cast<u64>(v));
}

IntegerWindow script_I_window(int n) {
  if (n < 0) throw precondition_error("script_I index must be >= 0");
  if (n == 0) return IntegerWindow::of(-2, -1);
  return IntegerWindow::of(-pow2(n + 1), -(pow2(n) + 1));
}

int band_index(i64 x) {
  if (x > -1) throw precondition_error("band_index needs x <= -1");
  if (x >= -2) return 0;
  return bit_length(-x - 1) - 1;
}

WindowedSet gen_J(int n) {
  require_index(n);
  std::vector<i64> elems;
  i64 off = 0;
  int m = n;
  while (m >= 2) {
    for (i64 v = 1; v <= pow2(m - 2); ++v) elems.push_back(off + v);
    off += pow2(m - 1);
    --m;
  }
  elems.push_back(off + 1);
  i64 hi = n <= 0 ? 1 : pow2(n) - 1;
  return WindowedSet::of_elements(IntegerWindow::of(1, std::max<i64>(hi, 1)), elems);
}

WindowedSet gen_K(int n) {
  require_index(n);
  if (n <= 1) return gen_J(n);
  if (n == 2) {
    return WindowedSet::of_elements(IntegerWindow::of(1, 3), {3});
  }
  std::vector<i64> elems;
  i64 q = pow2(n - 3);
  for (i64 v = q + 1; v <= 2 * q; ++v) elems.push_back(v);
  gen_J(n - 2).for_each([&](i64 v) { elems.push_back(6 * q + v); });
  return WindowedSet::of_elements(IntegerWindow::of(1, pow2(n) - 1), elems);
}

WindowedSet gen_I(int n) { return gen_K(n).shift(-(1 + pow2(n + 1))); }

WindowedSet gen_script_I(int n) {
  require_index(n);
  return WindowedSet::interval(script_I_window(n));
}

WindowedSet gen_U(int n) {
  require_index(n);
  IntegerWindow w = script_I_window(n);
  switch (n) {
    case 0: return WindowedSet::interval(w);
    case 1:
    case 2: return WindowedSet(w);
    case 3: return WindowedSet::of_elements(w, {6 - 17});
    case 4: return WindowedSet::of_elements(w, {3 - 33, 4 - 33, 14 - 33});
    default: {
      std::vector<i64> elems;
      i64 q = pow2(n - 3);
      i64 shift = -(1 + pow2(n + 1));
      for (i64 v = q + 1; v <= 2 * q; ++v) elems.push_back(v + shift);
      for (i64 v = 6 * q + 1; v <= 6 * q + q / 2; ++v) elems.push_back(v + shift);
      return WindowedSet::of_elements(w, elems);
    }
  }
}

bool member(const FamilySpec& f, i64 x) {
  switch (f.kind) {
    case FamilyKind::J: return member_J(f.n, x);
    case FamilyKind::K: return member_K(f.n, x);
    case FamilyKind::I: return member_I(f.n, x);
    case FamilyKind::ScriptI: return member_script_I(f.n, x);
    case FamilyKind::S: return member_S(x);
    case FamilyKind::T: return member_T(x);
    case FamilyKind::U: return member_U(x);
    case FamilyKind::V: return member_V(x);
    case FamilyKind::ScriptS: {
      if (!member_S(x)) return false;
      const auto& r = prefix_result(FamilyKind::ScriptS, f.budget);
      return !std::binary_search(r.removed.begin(), r.removed.end(), x);
    }
    case FamilyKind::ScriptU: {
      if (!member_U(x)) return false;
      const auto& r = prefix_result(FamilyKind::ScriptU, f.budget);
      return !std::binary_search(r.removed.begin(), r.removed.end(), x);
    }
    case FamilyKind::W: return w_greedy_cached(f.w_window).contains(x);
    case FamilyKind::Negated: return member(*f.base, -x);
    case FamilyKind::Shifted: return member(*f.base, x - f.c);
    case FamilyKind::Minus:
      return !std::binary_search(f.drop.begin(), f.drop.end(), x) && member(*f.base, x);
    case FamilyKind::Product:
      throw precondition_error("member: product families are not one-dimensional");
  }
  return false;
}

namespace {

// Structural materializers: union the finitely many layers meeting w.
void append_clipped(std::vector<i64>& out, const WindowedSet& layer, IntegerWindow w) {
  layer.for_each([&](i64 x) {
    if (w.contains(x)) out.push_back(x);
  });
}

WindowedSet materialize_S_like(IntegerWindow w, bool u_variant) {
  std::vector<i64> elems;
  if (w.lo <= -1 && w.hi >= -kMaxAbsMember) {
    int n_hi = band_index(std::min<i64>(w.hi, -1));
    int n_lo = band_index(std::max<i64>(w.lo, -kMaxAbsMember));
    for (int n = n_hi; n <= n_lo; ++n) {
      append_clipped(elems, u_variant ? gen_U(n) : gen_I(n), w);
    }
  }
  return WindowedSet::of_elements(w, elems);
}

WindowedSet materialize_powers(IntegerWindow w, bool both_signs) {
  std::vector<i64> elems;
  for (int k = 0; k <= 62; ++k) {
    i64 p = pow2(k);
    if (w.contains(p)) elems.push_back(p);
    if (both_signs && w.contains(-p)) elems.push_back(-p);
    if (p > std::max(std::abs(w.lo), std::abs(w.hi))) break;
  }
  return WindowedSet::of_elements(w, elems);
}

}  // namespace

WindowedSet materialize(const FamilySpec& f, IntegerWindow w) {
  switch (f.kind) {
    case FamilyKind::J: return gen_J(f.n).clip(w);
    case FamilyKind::K: return gen_K(f.n).clip(w);
    case FamilyKind::I: return gen_I(f.n).clip(w);
    case FamilyKind::ScriptI: return gen_script_I(f.n).clip(w);
    case FamilyKind::S: return materialize_S_like(w, false);
    case FamilyKind::U: return materialize_S_like(w, true);
    case FamilyKind::T: return materialize_powers(w, false);
    case FamilyKind::V: return materialize_powers(w, true);
    case FamilyKind::ScriptS:
    case FamilyKind::ScriptU: {
      WindowedSet base = materialize_S_like(w, f.kind == FamilyKind::ScriptU);
      const auto& r = prefix_result(f.kind, f.budget);
      for (i64 x : r.removed) base.remove(x);
      return base;
    }
    case FamilyKind::W: return w_greedy_cached(f.w_window).clip(w);
    case FamilyKind::Negated: return materialize(*f.base, w.negated()).negate().clip(w);
    case FamilyKind::Shifted: return materialize(*f.base, w.shifted(-f.c)).shift(f.c).clip(w);
    case FamilyKind::Minus: {
      WindowedSet base = materialize(*f.base, w);
      for (i64 x : f.drop) base.remove(x);
      return base;
    }
    case FamilyKind::Product:
      throw precondition_error("materialize: product families need a lattice box");
  }
  throw precondition_error("materialize: unknown family");
}

int default_tail_k0(i64 y) { return bit_length(y < 0 ? -y : y) + 4; }

TailVerdict tail_membership(const FamilySpec& f, i64 y, TailSign sign, int k0, int span) {
  if (span < 8) throw precondition_error("tail_membership: span must be >= 8");
  if (k0 < 0 || k0 + span > 62) throw precondition_error("tail_membership: exponent range");
  i64 s = sign == TailSign::plus ? 1 : -1;
  bool first = member(f, y - s * pow2(k0));
  for (int k = k0 + 1; k <= k0 + span; ++k) {
    if (member(f, y - s * pow2(k)) != first) {
      throw stabilization_error("tail_membership: predicate not constant on span (k0=" +
                                std::to_string(k0) + ", y=" + std::to_string(y) + ")");
    }
  }
  TailVerdict v;
  v.k0 = k0;
  v.value = first;
  v.checked_span = span;
  return v;
}

WindowedSet gen_W_greedy(IntegerWindow w) {
  if (w.lo != -w.hi || w.hi < 4) {
    throw precondition_error("gen_W_greedy: window must be symmetric around 0 with width >= 8");
  }
  const i64 hi = w.hi;
  const i64 mid = hi / 2;
  WindowedSet set(w);
  WindowedSet covered(IntegerWindow::of(-2 * hi, 2 * hi));
  std::vector<i64> members;

  auto forms_progression_with = [&](i64 x) {
    // A progression needs a + c = 2b with a != c. New element x can appear
    // as an endpoint or as the midpoint.
    for (i64 a : members) {
      if (a != x && set.contains(2 * x - a)) return true;              // x midpoint
      i64 other = 2 * a - x;                                           // a midpoint
      if (other != x && set.contains(other)) return true;
      if ((x + a) % 2 == 0 && (x + a) / 2 != 0) {                      // x,a endpoints
        i64 b = (x + a) / 2;
        if (b != x && b != a && set.contains(b)) return true;
      }
    }
    return false;
  };

  auto target_uncovered = [&](i64 x) {
    // Candidate sums after adding {-x, x}: x +- m, -x +- m, 0, +-2x.
    if (!covered.contains(0)) return true;
    for (i64 m : members) {
      for (i64 s : {x + m, x - m, -x + m, -x - m}) {
        if (s >= -mid && s <= mid && !covered.contains(s)) return true;
      }
    }
    for (i64 s : {2 * x, -2 * x}) {
      if (s >= -mid && s <= mid && !covered.contains(s)) return true;
    }
    return false;
  };

  auto add_pair = [&](i64 x) {
    for (i64 e : {-x, x}) {
      for (i64 m : members) {
        i64 s = e + m;
        if (covered.window().contains(s)) covered.add(s);
      }
      members.push_back(e);
      set.add(e);
      i64 twice = 2 * e;
      if (covered.window().contains(twice)) covered.add(twice);
    }
    covered.add(0);
  };

  auto all_covered = [&]() {
    for (i64 t = -mid; t <= mid; ++t) {
      if (!covered.contains(t)) return false;
    }
    return true;
  };

  for (i64 x = 1; x <= hi; ++x) {
    if (all_covered()) break;
    if (forms_progression_with(x) || forms_progression_with(-x)) continue;
    // Progressions using both new elements: endpoints {x, -x} have midpoint
    // 0 (never present); x as midpoint of (-x, 3x) needs 3x already in the
    // set, and symmetrically -3x.
    if (set.contains(3 * x) || set.contains(-3 * x)) continue;
    if (!target_uncovered(x)) continue;
    add_pair(x);
  }

  if (!all_covered()) {
    throw construction_error("gen_W_greedy: could not cover the middle half of the window");
  }
  return set;
}

}  // namespace cominimal
