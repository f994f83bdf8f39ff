#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cominimal/families.hpp"
#include "cominimal/lattice_set.hpp"
#include "cominimal/window.hpp"

namespace cominimal {

/// Exactly (a + b) clipped to `target`. Word-parallel: iterates the smaller
/// operand's elements and OR-shifts the larger operand's bitset. Wide
/// targets are split into chunks evaluated in parallel; the output is
/// identical regardless of chunking.
WindowedSet sumset(const WindowedSet& a, const WindowedSet& b, IntegerWindow target);

/// Exact clipped d-dimensional sumset.
LatticeSet sumset_lattice(const LatticeSet& a, const LatticeSet& b, const LatticeWindow& box);

struct RepTail {
  enum class Kind { none, infinite };
  Kind kind = Kind::none;
  TailVerdict verdict;  // meaningful when kind == infinite
  std::string desc;
};

/// All decompositions y = a + b with b drawn from a power-of-two family.
/// `pairs` lists every pair with |b| = 2^k, k <= horizon, sorted by b.
/// For partner V the list is provably complete (no larger |b| can work once
/// 2^{horizon-3} > |y|); for partner T the tail is classified by a
/// stabilized membership scan, and `tail` says whether representations
/// continue for every larger exponent.
struct RepresentationReport {
  i64 y = 0;
  std::vector<std::pair<i64, i64>> pairs;
  RepTail tail;
  int horizon = 0;
};

/// Partner must be T or V (arguments are swapped automatically when the
/// power family is passed first). Requires
/// horizon_k >= max(6, bit_length(|y|) + 3), the bound that makes the
/// partner-V enumeration provably complete.
RepresentationReport representations(i64 y, const FamilySpec& base, const FamilySpec& partner,
                                     int horizon_k);

enum class TailPolicy { classify, skip };

/// Same enumeration with finitely many base elements masked out, and
/// optionally one more excluded element. Used by the refinement and
/// minimality machinery. TailPolicy::skip leaves the tail field as `none`
/// without scanning; callers that only need the below-horizon pairs use it
/// to stay inside the exponent budget.
RepresentationReport representations_filtered(i64 y, const FamilySpec& base,
                                              const std::vector<i64>& removed,
                                              std::optional<i64> also_excluded,
                                              const FamilySpec& partner, int horizon_k,
                                              TailPolicy tail_policy = TailPolicy::classify);

/// Default enumeration horizon for a target.
int default_horizon(i64 y);

}  // namespace cominimal
