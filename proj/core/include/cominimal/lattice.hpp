#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cominimal/families.hpp"
#include "cominimal/lattice_set.hpp"
#include "cominimal/refine.hpp"
#include "cominimal/window.hpp"

namespace cominimal {

/// Square integer matrix acting on Z^n.
struct IntMatrix {
  std::vector<std::vector<i64>> entries;  // row major, square

  static IntMatrix from_rows(std::vector<std::vector<i64>> rows);
  int dim() const { return static_cast<int>(entries.size()); }
  i64 det() const;  // exact, fraction-free elimination
  bool is_automorphism() const { return det() == 1 || det() == -1; }
  Point apply(const Point& p) const;
  bool operator==(const IntMatrix&) const = default;
};

/// True iff the 2x2 matrix has exactly two zero entries and determinant
/// +-1, i.e. it is one of the eight signed coordinate permutations.
bool is_two_nonzero_gl2(const IntMatrix& m);

/// Block structure of an automorphism: rank-one steps act as the identity,
/// rank-two steps act as one of the eight signed permutations. Entries
/// above the block diagonal are free.
struct Block {
  enum class Kind { identity1, two_by_two };
  Kind kind = Kind::identity1;
  IntMatrix m;  // used when kind == two_by_two

  static Block identity();
  static Block two(IntMatrix m);  // must satisfy is_two_nonzero_gl2
  int dim() const { return kind == Kind::identity1 ? 1 : 2; }
};

struct BlockTriangularSpec {
  std::vector<Block> blocks;
  /// (row, col) -> entry strictly above the block diagonal.
  std::map<std::pair<int, int>, i64> above;

  int dim() const;
  IntMatrix to_matrix() const;
};

/// How far the 1-D family prefixes are materialized when lifted into
/// lattice constructions. magnitude <= 0 selects 16x the largest asserted
/// coordinate, which is enough reach for windowed coverage.
struct PrefixOptions {
  i64 magnitude = 0;
};

struct LatticePairReport {
  LatticeSet a;
  LatticeSet b;
  bool coverage_ok = false;
  std::optional<Point> first_uncovered;
  /// Element -> target lost when that element is removed.
  std::vector<std::pair<Point, Point>> a_witnesses;
  std::vector<std::pair<Point, Point>> b_witnesses;
  std::vector<Point> a_unwitnessed;
  std::vector<Point> b_unwitnessed;
  Certification certification = Certification::window_only;

  bool pass() const {
    return coverage_ok && a_unwitnessed.empty() && b_unwitnessed.empty();
  }
};

/// Coverage of the box's middle half by a + b, plus one lost-target witness
/// for every element of either set inside the middle half. Exact over the
/// given finite sets; certification is window-only.
LatticePairReport verify_cominimal_lattice(const LatticeSet& a, const LatticeSet& b,
                                           const LatticeWindow& box);

/// Lifts a 1-D pair through a subgroup: embeds (a, b) on the given axis and
/// adds the transversal sets c, d. Projections of c and d away from the
/// embedding axis must be injective.
std::pair<LatticeSet, LatticeSet> product_pair(const WindowedSet& a, const WindowedSet& b,
                                               const LatticeSet& c, const LatticeSet& d,
                                               int embedding_axis);

/// The two planar pairs built from shifted copies of the refined prefix and
/// the power prefix. Sequences shorter than the prefix are padded with 0;
/// empty sequences mean all-zero.
struct PlanarPairs {
  std::pair<LatticeSet, LatticeSet> first;
  std::pair<LatticeSet, LatticeSet> second;
};
PlanarPairs corollary_pairs(const std::vector<i64>& x_seq, const std::vector<i64>& y_seq,
                            const LatticeWindow& w, const PrefixOptions& opt = {});

/// Set A such that (A, sigma(A)) verifies as a co-minimal pair on the box,
/// with the per-block choice of A fixed by the block's matrix.
LatticeSet build_A_for_automorphism(const BlockTriangularSpec& spec, const LatticeWindow& w,
                                    const PrefixOptions& opt = {});

/// Quadrant-confined pair for the block-diagonal antidiagonal automorphism
/// of Z^{2d}. The window must have dimension 2d.
LatticePairReport build_quadrant_pair(int d, const LatticeWindow& w,
                                      const PrefixOptions& opt = {});

/// Every coordinate of every point shares a strict sign per axis.
bool is_in_quadrant(const LatticeSet& x);

/// Per-block pair verification composed across a product structure:
/// factor i lives on axes (2i, 2i+1) or a single axis for identity blocks.
LatticePairReport verify_product_pair(const std::vector<std::pair<LatticeSet, LatticeSet>>& factors,
                                      const LatticeWindow& box);

}  // namespace cominimal
