#pragma once

// Affine charts of the free nested Hilbert scheme, labelled by pairs of
// nested set chains, and the tableaux they map to.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace coxlink::charts {

using IndexPair = std::pair<int, int>;  // 1-based (row, column), row < column
using IntMatrix = std::vector<std::vector<long>>;

enum class Side { X, Y };

char side_letter(Side s);

/// Two chains S_x^1 ⊇ ... ⊇ S_x^n = ∅ and S_y^1 ⊇ ... ⊇ S_y^n = ∅ with
/// S^i ⊆ {i+1..n} and |S_x^i| + |S_y^i| = n - i. sx[i-1] holds S_x^i.
/// The two chains may share elements.
struct NestedSetPair {
  int n = 0;
  std::vector<std::set<int>> sx;
  std::vector<std::set<int>> sy;

  /// Flattened form [S_x^1, ..., S_x^n, S_y^1, ..., S_y^n], each level sorted.
  std::vector<std::vector<int>> flattened() const;
  /// e.g. "x:{3,4}{3}{}{} y:{4}{4}{4}{}"
  std::string encode() const;
  /// Throws InvariantError with the first violated condition.
  void validate() const;

  bool operator==(const NestedSetPair& o) const { return n == o.n && sx == o.sx && sy == o.sy; }
  bool operator<(const NestedSetPair& o) const { return flattened() < o.flattened(); }
};

/// Inverse of NestedSetPair::encode.
NestedSetPair decode_nested_pair(const std::string& text);

struct Pivot {
  int i = 0;
  int j = 0;
  Side side = Side::X;
};

struct Chart {
  NestedSetPair label;
  std::vector<IndexPair> px, py;  // pivots, set to 1
  std::vector<IndexPair> nx, ny;  // free coordinates
  std::vector<IndexPair> zx, zy;  // constrained zeros
  IntMatrix mx, my;               // base point: pivots 1, everything else 0

  int n() const { return label.n; }
  /// The unique pivot in row i (1 <= i < n).
  Pivot pivot_of_row(int i) const;
};

/// All of NS_n, sorted lexicographically by NestedSetPair::flattened.
/// ArgumentError for n < 1, CapacityError for n > 9.
std::vector<NestedSetPair> enumerate_nested_pairs(int n);

Chart build_chart(const NestedSetPair& s);
std::vector<Chart> all_charts(int n);

/// Words over {X, Y} for the basis vectors: word(n) is empty and
/// word(i) = L·word(j) for the pivot (i, j) on side L.
std::vector<std::string> basis_words(const Chart& c);

/// (m_1, ..., m_n) with m_k = word(n + 1 - k); m_1 is the empty word.
std::vector<std::string> monomial_vector(const Chart& c);

/// Lattice cells (deg_X, deg_Y) labelled by subsets of {1..n}.
struct GYT {
  std::map<std::pair<int, int>, std::set<int>> cells;

  /// Translated so the smallest occupied row and column are 0.
  GYT normalized() const;
  bool connected() const;
  /// Every label a singleton.
  bool all_singletons() const;
  /// Occupied cells form a Young diagram (down-closed) in the first quadrant.
  bool is_young_shape() const;
  /// Young shape, singleton labels, labels increasing along rows and columns.
  bool is_standard() const;
  /// e.g. "(0,0):{1} (1,0):{2}"
  std::string encode() const;

  bool operator==(const GYT& o) const { return cells == o.cells; }
  bool operator<(const GYT& o) const { return cells < o.cells; }
};

GYT to_gyt(const Chart& c);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix commutator(const IntMatrix& a, const IntMatrix& b);
bool is_zero(const IntMatrix& m);

/// [mx, my] == 0 at the base point.
bool is_commutative(const Chart& c);

struct InjectivityReport {
  int n = 0;
  std::size_t charts = 0;
  std::size_t images = 0;
  std::vector<std::vector<NestedSetPair>> collisions;  // groups of size > 1
};

/// CapacityError for n > 7.
InjectivityReport gyt_injectivity_report(int n);

}  // namespace coxlink::charts
