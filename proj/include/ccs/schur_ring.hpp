#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccs/group_table.hpp"
#include "ccs/report.hpp"
#include "ccs/scheme.hpp"

namespace ccs {

/// A partition of a group into basic sets, each sorted, ordered by
/// (size, least element). Two partitions compare equal iff they are the same
/// partition.
class BasicSetPartition {
 public:
  /// Throws std::invalid_argument if the sets do not partition the group.
  BasicSetPartition(GroupPtr group, std::vector<std::vector<int>> sets);

  /// Every element in its own set (the group ring).
  static BasicSetPartition singletons(GroupPtr group);
  /// {identity} and the rest.
  static BasicSetPartition trivial(GroupPtr group);

  const GroupTable& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int size() const { return static_cast<int>(sets_.size()); }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  const std::vector<int>& set(int k) const { return sets_[k]; }
  int set_of(int element) const { return set_of_[element]; }
  /// Index of the basic set equal to `elements` (sorted), or -1.
  int index_of(std::span<const int> elements) const;
  /// `elements` is a union of basic sets.
  bool is_union_of_sets(std::span<const int> elements) const;

  bool operator==(const BasicSetPartition& other) const { return sets_ == other.sets_; }

 private:
  GroupPtr group_;
  std::vector<std::vector<int>> sets_;
  std::vector<int> set_of_;
};

/// Sparse c_{XY}^Z over basic-set indices.
class StructureConstants {
 public:
  struct Entry {
    int x, y, z;
    long long c;
  };

  StructureConstants(int num_sets, std::vector<Entry> entries);

  int num_sets() const { return num_sets_; }
  long long operator()(int x, int y, int z) const;
  std::span<const Entry> products(int x, int y) const;
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  int num_sets_;
  std::vector<Entry> entries_;  // sorted by (x, y, z)
  std::vector<std::size_t> offsets_;
};

/// Identity singleton, inverse closure, product closure and commutativity.
/// The constants are written to `constants` when product closure holds.
Report validate_schur(const BasicSetPartition& part, std::optional<StructureConstants>* constants = nullptr);

/// Throws std::invalid_argument if the partition is not product-closed.
StructureConstants structure_constants(const BasicSetPartition& part);

/// {g} for g in P and the cosets X_i g.
BasicSetPartition paper_partition(const PaperGroupBundle& bundle);

/// Which partition of the family: the full one, S_i, S_ij or S_0.
struct FusionLevel {
  enum class Kind { full, single, pair, zero };
  Kind kind = Kind::full;
  int i = -1;  // 0-based
  int j = -1;  // 0-based, pair only, i < j

  static FusionLevel full() { return {}; }
  static FusionLevel single(int i) { return {Kind::single, i, -1}; }
  static FusionLevel pair(int i, int j);
  static FusionLevel zero() { return {Kind::zero, -1, -1}; }

  /// "1", "2", "3", "12", "13", "23", "0"; "" for the full partition.
  std::string name() const;
  bool operator==(const FusionLevel&) const = default;
};

/// Accepts the names produced by FusionLevel::name(). Throws std::invalid_argument.
FusionLevel parse_fusion_level(std::string_view name);

/// All seven fusion levels in the order 1, 2, 3, 12, 13, 23, 0.
std::vector<FusionLevel> all_fusion_levels();

BasicSetPartition fusion_partition(const PaperGroupBundle& bundle, FusionLevel level);

/// All nonempty pairwise intersections. Throws on mismatched groups.
BasicSetPartition meet_partitions(const BasicSetPartition& x, const BasicSetPartition& y);

/// Every set of `coarse` is a union of sets of `fine`.
bool is_fusion(const BasicSetPartition& coarse, const BasicSetPartition& fine);

struct WreathShape {
  bool ok = false;       // L is a union of sets and sets of U outside L are unions of L-cosets
  int base_rank = 0;     // sets inside L
  bool base_is_group_ring = false;
  int top_rank = 0;      // basic sets of the quotient U/L
  bool top_is_group_ring = false;
};

/// Shape of the restriction of `part` to the subgroup U as a wreath product
/// over its subgroup L (both sorted element sets, L inside U).
WreathShape wreath_shape(const BasicSetPartition& part, std::span<const int> U, std::span<const int> L);

/// The restriction of `part` to U and V multiply out to `part`, with
/// U V = G and U ∩ V = 1.
bool is_tensor_product(const BasicSetPartition& part, std::span<const int> U, std::span<const int> V);

/// Identifies which fusion level `part` is and checks its product structure:
/// tensor of two wreath products for S_i, wreath over P for S_0, and the
/// fusion relations for S_ij.
Report recognize_products(const BasicSetPartition& part, const PaperGroupBundle& bundle);

/// (A1) thin radical P with a C2 x C2 quotient, (A2) the sets X_i and their
/// radicals, (A3) the exhaustive positivity pattern of products of X_i-cosets,
/// and the unit constants of X_1 X_2 over the X_3-cosets.
Report verify_A_properties(const BasicSetPartition& part, const PaperGroupBundle& bundle);

/// Cayley scheme on the group: (g, h) has the color of the basic set of h g^{-1}.
Scheme cayley_scheme(const BasicSetPartition& part);

/// Scheme color of each basic set of `part` in cayley_scheme(part).
std::vector<int> set_colors(const Scheme& scheme, const BasicSetPartition& part);

/// Regular scheme of a group, that is, the Cayley scheme of the group ring.
Scheme regular_scheme(const GroupTable& group);

struct CayleyIsoResult {
  bool ok = false;
  std::vector<int> map;  // group isomorphism, element -> element
  std::string diagnostic;
};

/// Builds f from singleton images on P and the unique involution in the image
/// of each X_i, then checks f is a group isomorphism inducing psi. `psi` maps
/// set indices of `src` (paper_partition of `bundle`) to set indices of `dst`.
CayleyIsoResult cayley_iso_from_algebraic(std::span<const int> psi, const PaperGroupBundle& bundle,
                                          const BasicSetPartition& src, const BasicSetPartition& dst);

/// psi preserves sizes and all structure constants.
bool preserves_structure_constants(std::span<const int> psi, const StructureConstants& src,
                                   const StructureConstants& dst);

}  // namespace ccs
