#include "cominimal/verify.hpp"

#include <algorithm>
#include <cmath>

#include "cominimal/runtime.hpp"

namespace cominimal {

namespace {

i64 pow2(int k) { return i64(1) << k; }

i64 iabs(i64 v) { return v < 0 ? -v : v; }

int claim_horizon(i64 y, int trunc, int n) {
  return std::max({trunc, bit_length(iabs(y)) + 6, n + 6});
}

// Enumeration wrapper that treats a tail stabilization failure as a claim
// failure rather than an exception: an undecided tail can never certify.
std::optional<RepresentationReport> reps_or_nothing(i64 y, const FamilySpec& base,
                                                    const FamilySpec& partner, int horizon) {
  try {
    return representations(y, base, partner, horizon);
  } catch (const stabilization_error&) {
    return std::nullopt;
  }
}

bool all_pairs_through_partner(const RepresentationReport& rep, i64 b) {
  if (rep.pairs.empty()) return false;
  if (rep.tail.kind == RepTail::Kind::infinite) return false;
  for (const auto& [a, bb] : rep.pairs) {
    if (bb != b) return false;
  }
  return true;
}

bool all_pairs_through_base(const RepresentationReport& rep, i64 a0) {
  if (rep.pairs.empty()) return false;
  if (rep.tail.kind == RepTail::Kind::infinite) return false;
  for (const auto& [a, b] : rep.pairs) {
    if (a != a0) return false;
  }
  return true;
}

}  // namespace

IntegerWindow left_half(IntegerWindow w) {
  if (w.width() % 2 != 0) throw precondition_error("left_half: odd width");
  return IntegerWindow::of(w.lo, w.lo + w.width() / 2 - 1);
}

IntegerWindow right_half(IntegerWindow w) {
  if (w.width() % 2 != 0) throw precondition_error("right_half: odd width");
  return IntegerWindow::of(w.lo + w.width() / 2, w.hi);
}

IntegerWindow quarter(IntegerWindow w, int which) {
  if (which < 1 || which > 4) throw precondition_error("quarter: which must be 1..4");
  if (w.width() % 4 != 0) throw precondition_error("quarter: width not divisible by 4");
  i64 q = w.width() / 4;
  return IntegerWindow::of(w.lo + (which - 1) * q, w.lo + which * q - 1);
}

bool WitnessReport::all_witnessed() const {
  for (const auto& e : entries) {
    if (!e.witness) return false;
  }
  return true;
}

ClaimResult verify_complement_window(const FamilySpec& base, const FamilySpec& partner,
                                     IntegerWindow w, const std::vector<i64>& removed) {
  std::vector<i64> rm = removed;
  std::sort(rm.begin(), rm.end());
  ClaimResult res;
  res.claim_id = "complement-coverage";
  for (i64 y = w.lo; y <= w.hi; ++y) {
    auto rep_ok = [&]() {
      try {
        RepresentationReport rep =
            representations_filtered(y, base, rm, std::nullopt, partner, default_horizon(y));
        return !rep.pairs.empty() || rep.tail.kind == RepTail::Kind::infinite;
      } catch (const stabilization_error&) {
        return false;
      }
    };
    if (!rep_ok()) {
      res.holds = false;
      res.counterexample = y;
      return res;
    }
  }
  res.holds = true;
  return res;
}

namespace {

// Proof-named first-probe targets for partner-element removal.
std::vector<i64> seed_targets(const FamilySpec& base, i64 b) {
  std::vector<i64> seeds;
  if (base.kind == FamilyKind::S) {
    if (b == 1) seeds.push_back(-1);
    if (b == 2) seeds.push_back(-5 - (1 + pow2(5)));
    if (b >= 4) {
      int n = bit_length(b);  // b = 2^{n-1}
      IntegerWindow q = quarter(right_half(script_I_window(n)), 2);
      for (i64 y = q.lo; y <= q.hi; ++y) seeds.push_back(y);
    }
  } else if (base.kind == FamilyKind::U) {
    if (b == 2) seeds.push_back(1);
    if (b == 1) seeds.push_back(26 - (1 + pow2(6)));
    if (b == -1) seeds.push_back(25 - (1 + pow2(6)));
    if (b == -2) seeds.push_back(-4);
    if (b == -4) seeds.push_back(-6);
    if (b >= 4) {
      int n = bit_length(b) + 2;  // b = 2^{n-3}
      seeds.push_back(pow2(n - 1) + pow2(n - 2) + pow2(n - 3) + pow2(n - 4) - (1 + pow2(n + 1)));
    }
    if (b <= -8) {
      int n = bit_length(-b) + 2;  // b = -2^{n-3}
      seeds.push_back(pow2(n) - 2 - (1 + pow2(n + 1)));
    }
  }
  return seeds;
}

}  // namespace

WitnessReport verify_minimality(const FamilySpec& base, const FamilySpec& partner,
                                const std::vector<i64>& removable, IntegerWindow w) {
  WitnessReport report;
  report.direction = Direction::b_min_over_a;
  report.window = w;
  report.certification = Certification::window_and_tail;

  for (i64 b : removable) {
    if (!member(partner, b)) {
      throw precondition_error("verify_minimality: removable element not in partner");
    }
  }

  // Candidate base elements whose translates can land in w.
  i64 reach = 0;
  for (i64 b : removable) reach = std::max(reach, iabs(b));
  i64 lo = std::max<i64>(w.lo - reach, -(i64(1) << 32));
  WindowedSet base_elems = materialize(base, IntegerWindow::of(lo, -1));

  for (i64 b : removable) {
    WitnessEntry entry;
    entry.removed = b;
    report.horizon = std::max(report.horizon, default_horizon(w.lo));

    auto is_witness = [&](i64 y) {
      if (!w.contains(y)) return false;
      auto rep = reps_or_nothing(y, base, partner, default_horizon(y));
      return rep && all_pairs_through_partner(*rep, b);
    };

    for (i64 y : seed_targets(base, b)) {
      if (is_witness(y)) {
        entry.witness = y;
        break;
      }
    }
    if (!entry.witness) {
      std::vector<i64> candidates;
      base_elems.for_each([&](i64 a) {
        i64 y = a + b;
        if (w.contains(y)) candidates.push_back(y);
      });
      std::sort(candidates.begin(), candidates.end(),
                [](i64 l, i64 r) { return std::make_pair(iabs(l), l) < std::make_pair(iabs(r), r); });
      for (i64 y : candidates) {
        if (is_witness(y)) {
          entry.witness = y;
          break;
        }
      }
    }
    report.entries.push_back(entry);
  }
  return report;
}

std::optional<i64> verify_element_necessity_A(const FamilySpec& base, const FamilySpec& partner,
                                              i64 a, IntegerWindow w) {
  if (!member(base, a)) throw precondition_error("element necessity: a not in base");
  // Proof-named targets first.
  std::vector<i64> seeds;
  if (base.kind == FamilyKind::S) {
    if (a == -2) seeds.push_back(-1);
    if (a == -4) seeds.push_back(-3);
  } else if (base.kind == FamilyKind::U) {
    if (a == -40) seeds.push_back(-39);
    if (a == -39) seeds.push_back(-40);
    if (a == -2) {
      seeds.push_back(-4);
      seeds.push_back(-6);
    }
    if (a == -1) seeds.push_back(1);
  }
  for (i64 y : seeds) {
    if (!w.contains(y)) continue;
    auto rep = reps_or_nothing(y, base, partner, default_horizon(y));
    if (rep && all_pairs_through_base(*rep, a)) return y;
  }
  std::vector<i64> candidates;
  for (int k = 0; k <= 40; ++k) {
    for (i64 t : {pow2(k), -pow2(k)}) {
      if (t < 0 && partner.kind != FamilyKind::V) continue;
      if (!member(partner, t)) continue;
      i64 y = a + t;
      if (w.contains(y)) candidates.push_back(y);
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](i64 l, i64 r) { return std::make_pair(iabs(l), l) < std::make_pair(iabs(r), r); });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (i64 y : candidates) {
    auto rep = reps_or_nothing(y, base, partner, default_horizon(y));
    if (rep && all_pairs_through_base(*rep, a)) return y;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Claim suites for the (S, T) pair.
// ---------------------------------------------------------------------------

namespace {

struct StContext {
  FamilySpec S = FamilySpec::S();
  FamilySpec T = FamilySpec::T();
  int trunc;
};

// Donor classification of one target: which band each pair's base element
// falls in, plus whether representations continue past every horizon.
struct DonorScan {
  bool undecided = false;  // tail failed to stabilize
  bool infinite_tail = false;
  std::vector<std::pair<int, int>> band_and_exp;  // (band_index(a), k)
  bool covered = false;
};

DonorScan scan_donors(const StContext& cx, i64 y, int n) {
  DonorScan out;
  auto rep = reps_or_nothing(y, cx.S, cx.T, claim_horizon(y, cx.trunc, n));
  if (!rep) {
    out.undecided = true;
    return out;
  }
  out.infinite_tail = rep->tail.kind == RepTail::Kind::infinite;
  out.covered = !rep->pairs.empty() || out.infinite_tail;
  for (const auto& [a, b] : rep->pairs) {
    out.band_and_exp.emplace_back(band_index(a), bit_length(b) - 1);
  }
  return out;
}

void check_unique_donor_cluster(const StContext& cx, std::vector<ClaimResult>& out,
                                const std::string& id, int n, IntegerWindow cluster, int exp) {
  ClaimResult r;
  r.claim_id = id;
  r.n = n;
  for (i64 p = cluster.lo; p <= cluster.hi; ++p) {
    i64 y = p + pow2(exp);
    auto rep = reps_or_nothing(y, cx.S, cx.T, claim_horizon(y, cx.trunc, n));
    bool ok = rep && rep->tail.kind == RepTail::Kind::none && rep->pairs.size() == 1 &&
              rep->pairs[0] == std::make_pair(p, pow2(exp));
    if (!ok) {
      r.holds = false;
      r.counterexample = y;
      break;
    }
  }
  out.push_back(std::move(r));
}

void check_region_covered(const StContext& cx, std::vector<ClaimResult>& out,
                          const std::string& id, int n, IntegerWindow region) {
  ClaimResult r;
  r.claim_id = id;
  r.n = n;
  for (i64 y = region.lo; y <= region.hi; ++y) {
    DonorScan scan = scan_donors(cx, y, n);
    if (!scan.covered || scan.undecided) {
      r.holds = false;
      r.counterexample = y;
      break;
    }
  }
  out.push_back(std::move(r));
}

}  // namespace

std::vector<ClaimResult> check_claims_ST(int n_lo, int n_hi, int trunc) {
  if (n_lo < 2 || n_lo > n_hi || n_hi > 12) {
    throw precondition_error("check_claims_ST: need 2 <= n_lo <= n_hi <= 12");
  }
  StContext cx;
  cx.trunc = trunc > 0 ? trunc : default_config().claim_trunc;
  std::vector<ClaimResult> out;

  for (int n = n_lo; n <= n_hi; ++n) {
    IntegerWindow band = script_I_window(n);
    IntegerWindow rh = right_half(band);

    // No donor outside bands n, n+1 reaches the right half.
    {
      ClaimResult r;
      r.claim_id = "st-right-half-donor-bands";
      r.n = n;
      for (i64 y = rh.lo; y <= rh.hi; ++y) {
        DonorScan scan = scan_donors(cx, y, n);
        bool ok = !scan.undecided && !scan.infinite_tail;
        for (const auto& [b, k] : scan.band_and_exp) {
          ok = ok && (b == n || b == n + 1);
        }
        if (!ok) {
          r.holds = false;
          r.counterexample = y;
          break;
        }
      }
      out.push_back(std::move(r));
    }

    if (n >= 3) {
      IntegerWindow q1r = quarter(rh, 1);
      IntegerWindow q2r = quarter(rh, 2);

      auto donors_confined = [&](const std::string& id, IntegerWindow region, int banned_band,
                                 std::optional<int> allowed_exp) {
        ClaimResult r;
        r.claim_id = id;
        r.n = n;
        for (i64 y = region.lo; y <= region.hi; ++y) {
          DonorScan scan = scan_donors(cx, y, n);
          bool ok = !scan.undecided;
          for (const auto& [b, k] : scan.band_and_exp) {
            if (b != banned_band) continue;
            if (allowed_exp && k == *allowed_exp) continue;
            ok = false;
          }
          if (!ok) {
            r.holds = false;
            r.counterexample = y;
            break;
          }
        }
        out.push_back(std::move(r));
      };

      // Second quarter of the right half: never from band n+1; from band n
      // only through 2^{n-1}.
      donors_confined("st-second-quarter-right-half-no-next-band", q2r, n + 1, std::nullopt);
      donors_confined("st-second-quarter-right-half-single-power", q2r, n, n - 1);
      // First quarter of the right half: never from band n; from band n+1
      // only through 2^n.
      donors_confined("st-first-quarter-right-half-no-own-band", q1r, n, std::nullopt);
      donors_confined("st-first-quarter-right-half-single-power", q1r, n + 1, n);

      // Forced clusters: each point is the unique donor of its target.
      check_unique_donor_cluster(
          cx, out, "st-second-quarter-left-half-forced", n,
          IntegerWindow::of(pow2(n - 3) + 1 - (1 + pow2(n + 1)), pow2(n - 2) - (1 + pow2(n + 1))),
          n - 1);
      check_unique_donor_cluster(
          cx, out, "st-left-quarter-right-quarter-forced", n,
          IntegerWindow::of(3 * pow2(n - 1) + 1 - (1 + pow2(n + 2)),
                            3 * pow2(n - 1) + pow2(n - 3) - (1 + pow2(n + 2))),
          n);

      check_region_covered(cx, out, "st-cover-first-quarter-right-half", n, q1r);
      check_region_covered(cx, out, "st-cover-second-quarter-right-half", n, q2r);
    }

    if (n >= 1) check_region_covered(cx, out, "st-cover-left-half", n, left_half(band));
    if (n >= 4) check_region_covered(cx, out, "st-cover-right-quarter", n, quarter(band, 4));
  }

  // Base coverage: {0}, both small bands, right half of band 2, right
  // quarter of band 3.
  {
    ClaimResult r;
    r.claim_id = "st-cover-base";
    r.n = 0;
    std::vector<i64> pts = {0, -1, -2, -3, -4};
    for (i64 y = -6; y <= -5; ++y) pts.push_back(y);    // right half of band 2
    for (i64 y = -10; y <= -9; ++y) pts.push_back(y);   // right quarter of band 3
    for (i64 y : pts) {
      DonorScan scan = scan_donors(cx, y, 3);
      if (!scan.covered || scan.undecided) {
        r.holds = false;
        r.counterexample = y;
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Claim suite for the (U, V) pair.
// ---------------------------------------------------------------------------

namespace {

struct UvPairScan {
  std::vector<std::pair<i64, i64>> pairs;
};

UvPairScan uv_pairs(i64 y, int trunc, int n) {
  UvPairScan out;
  RepresentationReport rep = representations(y, FamilySpec::U(), FamilySpec::V(),
                                             claim_horizon(y, trunc, n));
  out.pairs = rep.pairs;
  return out;
}

int uv_band(i64 u) { return band_index(u); }

void uv_exact_list_claim(std::vector<ClaimResult>& out, const std::string& id, i64 y,
                         std::pair<i64, i64> expected, int trunc) {
  ClaimResult r;
  r.claim_id = id;
  r.n = 0;
  UvPairScan scan = uv_pairs(y, trunc, 6);
  if (scan.pairs.size() != 1 || scan.pairs[0] != expected) {
    r.holds = false;
    r.counterexample = y;
  }
  out.push_back(std::move(r));
}

}  // namespace

std::vector<ClaimResult> check_claims_UV(int n_lo, int n_hi, int trunc) {
  if (n_lo < 2 || n_lo > n_hi || n_hi > 12) {
    throw precondition_error("check_claims_UV: need 2 <= n_lo <= n_hi <= 12");
  }
  if (trunc <= 0) trunc = default_config().claim_trunc;
  std::vector<ClaimResult> out;

  for (int n = n_lo; n <= n_hi; ++n) {
    IntegerWindow rh = right_half(script_I_window(n));

    // Claim 1: right-half donors come from bands <= n+1.
    {
      ClaimResult r;
      r.claim_id = "uv-right-half-donor-bands";
      r.n = n;
      for (i64 y = rh.lo; y <= rh.hi && r.holds; ++y) {
        for (const auto& [u, v] : uv_pairs(y, trunc, n).pairs) {
          if (uv_band(u) >= n + 2) {
            r.holds = false;
            r.counterexample = y;
            break;
          }
        }
      }
      out.push_back(std::move(r));
    }

    // Claim 2 (n >= 3): band n+1 reaches the right half only through 2^n.
    if (n >= 3) {
      ClaimResult r;
      r.claim_id = "uv-right-half-next-band-single-power";
      r.n = n;
      for (i64 y = rh.lo; y <= rh.hi && r.holds; ++y) {
        for (const auto& [u, v] : uv_pairs(y, trunc, n).pairs) {
          if (uv_band(u) == n + 1 && v != pow2(n)) {
            r.holds = false;
            r.counterexample = y;
            break;
          }
        }
      }
      out.push_back(std::move(r));
    }

    // Claim 3 (n >= 5): the peak of the third quarter of the right quarter
    // is reachable only as (band n element) + 2^{n-3}.
    if (n >= 5) {
      ClaimResult r;
      r.claim_id = "uv-third-quarter-peak-forces-power";
      r.n = n;
      i64 y = pow2(n - 1) + pow2(n - 2) + pow2(n - 3) + pow2(n - 4) - (1 + pow2(n + 1));
      for (const auto& [u, v] : uv_pairs(y, trunc, n).pairs) {
        if (uv_band(u) != n || v != pow2(n - 3)) {
          r.holds = false;
          r.counterexample = y;
          break;
        }
      }
      out.push_back(std::move(r));
    }

    // Claim 9 (n >= 6): the third largest band element needs -2^{n-3}.
    if (n >= 6) {
      ClaimResult r;
      r.claim_id = "uv-third-largest-forces-negative-power";
      r.n = n;
      i64 y = pow2(n) - 2 - (1 + pow2(n + 1));
      for (const auto& [u, v] : uv_pairs(y, trunc, n).pairs) {
        if (v != -pow2(n - 3)) {
          r.holds = false;
          r.counterexample = y;
          break;
        }
      }
      out.push_back(std::move(r));
    }
  }

  // Claims 4-8: fixed targets with a single admissible pair.
  uv_exact_list_claim(out, "uv-one-forces-two", 1, {-1, 2}, trunc);
  uv_exact_list_claim(out, "uv-minus39-forces-one", 26 - (1 + pow2(6)), {-40, 1}, trunc);
  uv_exact_list_claim(out, "uv-minus40-forces-minus-one", 25 - (1 + pow2(6)), {-39, -1}, trunc);
  uv_exact_list_claim(out, "uv-minus4-forces-minus-two", -4, {-2, -2}, trunc);
  uv_exact_list_claim(out, "uv-minus6-forces-minus-four", -6, {-2, -4}, trunc);
  return out;
}

std::vector<ClaimResult> check_uv_finiteness(int n_lo, int n_hi) {
  if (n_lo < 4) throw precondition_error("check_uv_finiteness: need n_lo >= 4");
  if (n_lo > n_hi || n_hi > 40) throw precondition_error("check_uv_finiteness: bad range");
  std::vector<ClaimResult> out;

  // U layers are unions of at most two intervals; interval arithmetic makes
  // the disjointness check exact for every layer index up to 54.
  auto layer_intervals = [](int m) {
    std::vector<IntegerWindow> iv;
    if (m == 0) {
      iv.push_back(IntegerWindow::of(-2, -1));
    } else if (m == 3) {
      iv.push_back(IntegerWindow::of(-11, -11));
    } else if (m == 4) {
      iv.push_back(IntegerWindow::of(-30, -29));
      iv.push_back(IntegerWindow::of(-19, -19));
    } else if (m >= 5) {
      i64 c = 1 + pow2(m + 1);
      iv.push_back(IntegerWindow::of(pow2(m - 3) + 1 - c, pow2(m - 2) - c));
      iv.push_back(IntegerWindow::of(6 * pow2(m - 3) + 1 - c, 6 * pow2(m - 3) + pow2(m - 4) - c));
    }
    return iv;
  };

  for (int n = n_lo; n <= n_hi; ++n) {
    ClaimResult r;
    r.claim_id = "uv-central-band-disjoint";
    r.n = n;
    IntegerWindow band = IntegerWindow::of(-pow2(n - 3), pow2(n - 3) - 1);
    for (int m = n; m <= 54 && r.holds; ++m) {
      for (const IntegerWindow& iv : layer_intervals(m)) {
        for (int k = 0; k <= 56 && r.holds; ++k) {
          for (i64 v : {pow2(k), -pow2(k)}) {
            i64 lo = iv.lo + v;
            i64 hi = iv.hi + v;
            if (lo <= band.hi && hi >= band.lo) {
              r.holds = false;
              r.counterexample = std::max(lo, band.lo);
              break;
            }
          }
        }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool is_3ap_free(const WindowedSet& a) {
  std::vector<i64> e = a.elements();
  for (size_t i = 0; i < e.size(); ++i) {
    for (size_t j = i + 1; j < e.size(); ++j) {
      if ((e[i] + e[j]) % 2 != 0) continue;
      i64 mid = (e[i] + e[j]) / 2;
      if (a.contains(mid)) return false;
    }
  }
  return true;
}

bool check_self_cominimal_cyclic(std::uint32_t a_mask, int m) {
  if (m < 1 || m > 30) throw precondition_error("cyclic check: need 1 <= m <= 30");
  const std::uint32_t full = (std::uint32_t(1) << m) - 1;
  a_mask &= full;
  if (a_mask == 0) return false;

  auto rot = [&](std::uint32_t mask, int i) {
    if (i == 0) return mask & full;
    return ((mask << i) | (mask >> (m - i))) & full;
  };

  std::uint32_t sum = 0;
  for (int i = 0; i < m; ++i) {
    if (a_mask & (std::uint32_t(1) << i)) sum |= rot(a_mask, i);
  }
  if (sum != full) return false;

  auto has = [&](int r) { return (a_mask >> (((r % m) + m) % m)) & 1; };
  for (int x = 0; x < m; ++x) {
    if (!has(x)) continue;
    for (int d = 1; d < m; ++d) {
      if (has(x + d) && has(x + 2 * d)) return false;
    }
  }
  return true;
}

bool check_self_cominimal_cyclic(const std::vector<int>& residues, int m) {
  std::uint32_t mask = 0;
  for (int r : residues) {
    int rr = ((r % m) + m) % m;
    mask |= std::uint32_t(1) << rr;
  }
  return check_self_cominimal_cyclic(mask, m);
}

}  // namespace cominimal
