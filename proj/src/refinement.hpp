#pragma once

// Joint individualization-refinement on two colored complete digraphs that
// share a color space. Used by the automorphism and isomorphism searches.

#include <optional>
#include <span>
#include <vector>

#include "ccs/permutation.hpp"

namespace ccs::detail {

struct RefinedNode {
  std::vector<int> src;  // point colors, ids 0..cells-1
  std::vector<int> dst;
  int cells = 0;
  bool ok = true;  // the two sides have the same color multiset at every round
};

class PairRefiner {
 public:
  /// `src` and `dst` are row-major n x n color matrices over one color space.
  PairRefiner(int n, std::span<const int> src, std::span<const int> dst, long long budget);

  RefinedNode root();
  /// Gives x (source) and y (target) a fresh color and refines to stability.
  RefinedNode individualize(const RefinedNode& node, int x, int y);

  bool is_discrete(const RefinedNode& node) const { return node.cells == n_; }
  /// Smallest non-singleton cell, lowest color on ties; -1 when discrete.
  int target_cell(const RefinedNode& node) const;
  std::vector<int> cell_points(const std::vector<int>& colors, int cell) const;

  /// Point map of a discrete node if it carries src onto dst.
  std::optional<Permutation> leaf_map(const RefinedNode& node) const;

  /// First isomorphism below `node`, source side following the least point
  /// of the target cell, target side trying cell points in increasing order.
  std::optional<Permutation> search(const RefinedNode& node);

  /// Counts one search node; throws SearchBudgetExceeded past the budget.
  void tick();
  long long nodes() const { return nodes_; }

 private:
  void refine(RefinedNode& node);

  int n_;
  std::span<const int> src_;
  std::span<const int> dst_;
  long long budget_;
  long long nodes_ = 0;
};

}  // namespace ccs::detail
