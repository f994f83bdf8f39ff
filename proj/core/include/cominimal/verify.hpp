#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cominimal/families.hpp"
#include "cominimal/refine.hpp"
#include "cominimal/sumset.hpp"
#include "cominimal/window.hpp"

namespace cominimal {

/// Verdict of one named claim instance. A false verdict always carries a
/// counterexample that can be re-checked independently.
struct ClaimResult {
  std::string claim_id;
  int n = 0;
  bool holds = true;
  std::optional<i64> counterexample;
};

enum class Direction { a_min_over_b, b_min_over_a };

struct WitnessEntry {
  i64 removed = 0;
  std::optional<i64> witness;  // absent: unverified in the window, not falsified
};

struct WitnessReport {
  Direction direction = Direction::b_min_over_a;
  std::vector<WitnessEntry> entries;
  Certification certification = Certification::window_and_tail;
  IntegerWindow window;
  int horizon = 0;
  bool all_witnessed() const;
};

/// Every y in w must have at least one representation over base + partner
/// (enumerated with the default horizon; elements in `removed` are masked).
ClaimResult verify_complement_window(const FamilySpec& base, const FamilySpec& partner,
                                     IntegerWindow w, const std::vector<i64>& removed = {});

/// For each removable partner element b, looks for a target y in w whose
/// representations all go through b (pairs complete below the horizon, tail
/// classified). Proof-named targets are probed first, then ascending |y|.
WitnessReport verify_minimality(const FamilySpec& base, const FamilySpec& partner,
                                const std::vector<i64>& removable, IntegerWindow w);

/// Witness y with y not representable once base element a is removed.
std::optional<i64> verify_element_necessity_A(const FamilySpec& base, const FamilySpec& partner,
                                              i64 a, IntegerWindow w);

/// Named claim suite for the (S, T) pair: the forced-cluster claims, the
/// donor-confinement claims, and the windowed coverage statements.
/// trunc bounds the enumerated partner exponent; verdicts must be stable
/// under enlarging it.
std::vector<ClaimResult> check_claims_ST(int n_lo, int n_hi, int trunc = 0);

/// Named claim suite for the (U, V) pair (claims 1-9).
std::vector<ClaimResult> check_claims_UV(int n_lo, int n_hi, int trunc = 0);

/// Central-band disjointness: [-2^{n-3}, 2^{n-3} - 1] misses every
/// U-layer sum with layer index >= n. Exact interval reasoning over all
/// layer indices up to 54.
std::vector<ClaimResult> check_uv_finiteness(int n_lo, int n_hi);

/// No a, b, c in A with a + c = 2b and a != c.
bool is_3ap_free(const WindowedSet& a);

/// Subsets of Z_m as bitmasks (bit i = residue i).
/// True iff A + A = Z_m and A contains no progression x, x+d, x+2d (mod m)
/// with d != 0. On Z the two progression phrasings agree; mod m the d != 0
/// form is the one equivalent to brute-force co-minimality of (A, A).
bool check_self_cominimal_cyclic(std::uint32_t a_mask, int m);
bool check_self_cominimal_cyclic(const std::vector<int>& residues, int m);

/// Interval slicing helpers shared by the claim suites.
IntegerWindow left_half(IntegerWindow w);
IntegerWindow right_half(IntegerWindow w);
IntegerWindow quarter(IntegerWindow w, int which);  // 1..4

}  // namespace cominimal
