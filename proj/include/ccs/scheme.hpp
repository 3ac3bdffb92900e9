#pragma once

#include <array>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "ccs/group_table.hpp"
#include "ccs/report.hpp"

namespace ccs {

/// A coherent configuration: a partition of Omega x Omega into color classes,
/// stored as a dense n x n color matrix. Colors are numbered canonically:
/// diagonal colors first by least point, then off-diagonal colors by
/// (valency, least pair).
class Scheme {
 public:
  /// Validates that the coloring is WL-stable and renumbers it canonically.
  /// Throws std::invalid_argument otherwise.
  static Scheme from_colors(int degree, std::vector<int> colors);

  /// Renumbers canonically without the stability check. For producers whose
  /// output is coherent by construction (Cayley schemes, 2-orbit partitions).
  static Scheme assume_coherent(int degree, std::vector<int> colors);

  int degree() const { return degree_; }
  int rank() const { return rank_; }
  int color(int a, int b) const { return colors_[static_cast<std::size_t>(a) * degree_ + b]; }
  std::span<const int> colors() const { return colors_; }
  std::span<const int> row(int a) const {
    return std::span<const int>(colors_).subspan(static_cast<std::size_t>(a) * degree_, degree_);
  }

  int valency(int c) const { return info_[c].valency; }
  long long size(int c) const { return info_[c].size; }
  bool is_diagonal(int c) const { return info_[c].diagonal; }
  int transpose(int c) const { return info_[c].transpose; }
  std::pair<int, int> least_pair(int c) const { return info_[c].least; }
  /// Diagonal colors of the source and target fibers of color c.
  int domain(int c) const { return info_[c].domain; }
  int codomain(int c) const { return info_[c].codomain; }

  int num_diagonal_colors() const { return num_diagonal_; }
  bool is_association_scheme() const { return num_diagonal_ == 1; }

  bool operator==(const Scheme& other) const {
    return degree_ == other.degree_ && colors_ == other.colors_;
  }

 private:
  struct ColorInfo {
    long long size = 0;
    int valency = 0;
    bool diagonal = false;
    int transpose = -1;
    int domain = -1;
    int codomain = -1;
    std::pair<int, int> least{-1, -1};
  };

  Scheme(int degree, std::vector<int> canonical_colors, int rank);

  int degree_ = 0;
  int rank_ = 0;
  int num_diagonal_ = 0;
  std::vector<int> colors_;
  std::vector<ColorInfo> info_;
};

/// Canonical renumbering of an arbitrary n x n coloring; returns the rank.
int canonicalize_colors(int degree, std::vector<int>& colors);

/// One WL round leaves the partition unchanged.
bool is_wl_stable(int degree, std::span<const int> colors);

struct WlStats {
  int rounds = 0;
  int initial_rank = 0;
  int final_rank = 0;
};

/// Coarsest WL-stable refinement of `initial` (two-dimensional
/// Weisfeiler-Leman). Pairs are recolored by the exact multiset of color pairs
/// over intermediate points until the partition stops splitting.
Scheme wl_stabilize(int degree, std::span<const int> initial, WlStats* stats = nullptr);

/// Sparse exact tensor of intersection numbers c_{st}^u.
class IntersectionTensor {
 public:
  struct Entry {
    int s, t, u;
    long long c;
  };

  IntersectionTensor(int rank, std::vector<int> valencies, std::vector<int> transpose,
                     std::vector<int> domain, std::vector<int> codomain, std::vector<Entry> entries);

  int rank() const { return rank_; }
  int valency(int s) const { return valencies_[s]; }
  const std::vector<int>& valencies() const { return valencies_; }
  int transpose(int s) const { return transpose_[s]; }
  const std::vector<int>& transposes() const { return transpose_; }
  int domain(int s) const { return domain_[s]; }
  int codomain(int s) const { return codomain_[s]; }
  bool is_diagonal(int s) const { return domain_[s] == s; }

  /// c_{st}^u, zero when absent.
  long long operator()(int s, int t, int u) const;
  /// Nonzero entries with fixed (s, t), sorted by u.
  std::span<const Entry> products(int s, int t) const;
  const std::vector<Entry>& entries() const { return entries_; }

  /// sum_u c_{st}^u n_u = n_s n_t on composable pairs and
  /// c_{st}^u = c_{t*s*}^{u*} everywhere.
  Report check_identities() const;
  bool is_commutative() const;

  bool operator==(const IntersectionTensor& other) const;

 private:
  int rank_;
  std::vector<int> valencies_, transpose_, domain_, codomain_;
  std::vector<Entry> entries_;          // sorted by (s, t, u)
  std::vector<std::size_t> offsets_;    // rank^2 + 1
};

using TensorPtr = std::shared_ptr<const IntersectionTensor>;

/// Counts paths through the least pair of each color; exact because the
/// scheme is coherent.
IntersectionTensor intersection_tensor(const Scheme& scheme);

/// A union of colors forming an equivalence relation on the points.
class Parabolic {
 public:
  /// Throws std::invalid_argument if the union is not an equivalence relation.
  Parabolic(const Scheme& scheme, std::vector<int> colors);

  static Parabolic diagonal(const Scheme& scheme);

  int degree() const { return static_cast<int>(class_of_.size()); }
  const std::vector<int>& colors() const { return colors_; }
  bool contains_color(int c) const;
  int class_of(int point) const { return class_of_[point]; }
  /// Classes numbered by least point, each sorted.
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  bool is_thin(const Scheme& scheme) const;

 private:
  std::vector<int> colors_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
};

/// Thin radical of an association scheme together with the group its colors
/// form under composition. Element k of `group` is color `colors[k]`.
struct ThinRadical {
  std::vector<int> colors;
  std::shared_ptr<const GroupTable> group;
  Parabolic closure;

  int element_of(int color) const;
};

ThinRadical thin_radical(const Scheme& scheme, const IntersectionTensor& tensor);

/// Composition of a thin color with an arbitrary one is a single color.
int compose_thin(const IntersectionTensor& tensor, int s, int t);

/// Scheme on the classes of `parabolic`; the color of a pair of classes is the
/// multiset of fine colors between them. Throws if the result is not coherent.
Scheme quotient_scheme(const Scheme& scheme, const Parabolic& parabolic);

/// Largest thin parabolic e inside the thin radical closure with
/// e∘s = s∘e = s.
Parabolic radical_of_color(const Scheme& scheme, const IntersectionTensor& tensor,
                           const ThinRadical& radical, int color);

struct BPropertiesReport {
  Report report;
  /// The three nontrivial symmetric colors, when exactly three exist.
  std::array<int, 3> symmetric_colors{-1, -1, -1};
};

/// Commutativity, the thin radical and quotient shape, the three radicals of
/// the symmetric colors, and the exhaustive positivity pattern of their
/// products, for a scheme of degree 4p^2.
BPropertiesReport verify_B_properties(const Scheme& scheme);

/// Partition of Omega x Omega by pairs of colors (not re-stabilized).
std::vector<int> intersect_colorings(const Scheme& a, const Scheme& b);

/// Meet in the lattice of coherent configurations: WL closure of the
/// color-pair intersection.
Scheme meet_schemes(const Scheme& a, const Scheme& b);

/// Every color of `coarse` is a union of colors of `fine`.
bool is_fusion(const Scheme& coarse, const Scheme& fine);

}  // namespace ccs
