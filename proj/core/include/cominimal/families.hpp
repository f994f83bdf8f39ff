#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cominimal/window.hpp"

namespace cominimal {

// Structured integer families with exact O(log|x|) membership oracles and
// windowed materializers. The finite layers are:
//
//   J(n): {1} for n <= 1; {1..2^{n-2}} u (2^{n-1} + J(n-1)) for n >= 2
//   K(n): J(0), J(1), J(2)\{1}; {2^{n-3}+1..2^{n-2}} u (2^{n-1}+2^{n-2}+J(n-2)) for n >= 3
//   I(n)      = K(n) - (1 + 2^{n+1})
//   scriptI(n): {-2,-1} for n = 0; {1..2^n} - (1 + 2^{n+1}) for n >= 1
//   U(n): {-2,-1}; empty; empty; {6}-(1+2^4); {3,4,14}-(1+2^5);
//         ((2^{n-3} + {1..2^{n-3}}) u (2^{n-1}+2^{n-2}+{1..2^{n-4}})) - (1+2^{n+1})
//
// and the infinite unions / power families built from them:
//
//   S = union of all I(n)        T = {2^k : k >= 0}
//   U = union of all U(n)        V = {2^k} u {-2^k}
//
// scriptS/scriptU are greedily refined prefixes of S/U (see refine.hpp),
// and W is a symmetric, progression-free additive basis generated on a
// window (gen_W_greedy).

enum class FamilyKind {
  J,
  K,
  I,
  ScriptI,
  S,
  T,
  U,
  V,
  ScriptS,  // refined prefix of S, parameterized by budget
  ScriptU,  // refined prefix of U, parameterized by budget
  W,        // greedy symmetric basis on a stored window
  Negated,
  Shifted,
  Minus,    // base family with finitely many elements masked out
  Product,  // cartesian product; only meaningful to lattice materializers
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::S;
  int n = 0;                 // index for J/K/I/ScriptI/U
  int budget = 0;            // ScriptS/ScriptU
  i64 c = 0;                 // Shifted offset
  IntegerWindow w_window;    // W construction window
  std::shared_ptr<const FamilySpec> base;  // Negated/Shifted/Minus
  std::vector<i64> drop;                   // Minus
  std::vector<FamilySpec> factors;         // Product

  static FamilySpec J(int n);
  static FamilySpec K(int n);
  static FamilySpec I(int n);
  static FamilySpec script_I(int n);
  static FamilySpec S();
  static FamilySpec T();
  static FamilySpec U();
  static FamilySpec V();
  static FamilySpec script_S(int budget);
  static FamilySpec script_U(int budget);
  static FamilySpec W(IntegerWindow w);
  static FamilySpec negated(FamilySpec base);
  static FamilySpec shifted(FamilySpec base, i64 c);
  static FamilySpec minus(FamilySpec base, std::vector<i64> drop);
  static FamilySpec product(std::vector<FamilySpec> factors);

  std::string describe() const;
};

// Finite layer generators (exact, full sets).
WindowedSet gen_J(int n);
WindowedSet gen_K(int n);
WindowedSet gen_I(int n);
WindowedSet gen_script_I(int n);
WindowedSet gen_U(int n);

/// Window holding scriptI(n): [-2,-1] for n = 0, [-2^{n+1}, -(2^n + 1)] else.
IntegerWindow script_I_window(int n);
/// Index n with x in scriptI(n); requires x <= -1.
int band_index(i64 x);
/// Smallest n with 2^n > v, i.e. number of bits of v (v >= 0).
int bit_length(i64 v);

/// Exact membership. Product specs are rejected (they are not 1-D).
bool member(const FamilySpec& f, i64 x);

/// Exactly f intersected with w. Built from the structural layer
/// generators, not by probing member(), so the two can cross-check.
WindowedSet materialize(const FamilySpec& f, IntegerWindow w);

enum class TailSign { plus, minus };

/// Outcome of a stabilized membership scan along y - sign * 2^k.
struct TailVerdict {
  int k0 = 0;           // first scanned exponent
  bool value = false;   // the constant value over the span
  int checked_span = 0;
};

inline constexpr int kDefaultTailSpan = 16;
int default_tail_k0(i64 y);

/// Evaluates P(k) = member(f, y - sign*2^k) for k in [k0, k0+span].
/// Returns the constant value; throws stabilization_error when P is not
/// constant on the span. The verdict is empirical: callers must surface
/// the certification level that relies on it.
TailVerdict tail_membership(const FamilySpec& f, i64 y, TailSign sign, int k0,
                            int span = kDefaultTailSpan);

/// Deterministic symmetric additive basis on a window symmetric around 0:
/// scans x = 1, 2, ... and admits the pair {-x, x} when it keeps the set
/// free of three-term progressions and covers a still-uncovered target in
/// the middle half [-hi/2, hi/2]. 0 is never admitted: with any pair
/// {-x, x} present it would complete the progression (-x, 0, x).
/// Postconditions: progression-free, symmetric, W + W covers the middle
/// half; construction_error when the scan cannot reach coverage.
WindowedSet gen_W_greedy(IntegerWindow w);

}  // namespace cominimal
