#pragma once

#include <array>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccs/report.hpp"

namespace ccs {

/// A finite group given by its full multiplication table over element
/// indices 0..order-1. Immutable once constructed.
class GroupTable {
 public:
  /// Builds a group from a row-major product table. Checks that the table is
  /// a Latin square with a two-sided identity; associativity is left to
  /// check_axioms() because it is cubic.
  GroupTable(int order, std::vector<int> table, std::string label);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::string& label() const { return label_; }
  std::span<const int> table() const { return table_; }
  std::span<const int> inverses() const { return inverse_; }

  int element_order(int a) const;
  int exponent() const;
  bool is_abelian() const;
  std::vector<int> center() const;

  /// Exhaustive check of associativity, identity, inverse and Latin-square laws.
  Report check_axioms() const;

  static GroupTable cyclic(int n);
  /// Dihedral group of order 2m: elements r^k s^e encoded as e*m + k.
  static GroupTable dihedral(int m);
  /// A ⋊ C2 where the involution inverts every element of the abelian group A.
  static GroupTable generalized_dihedral(const GroupTable& abelian, std::string label = {});
  /// Element (a, b) is encoded as a * |rhs| + b.
  static GroupTable direct_product(const GroupTable& lhs, const GroupTable& rhs,
                                   std::string label = {});

 private:
  int order_;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// A subgroup as a sorted element set of its parent group.
class Subgroup {
 public:
  /// Validates closure; throws std::invalid_argument if `elements` is not a subgroup.
  Subgroup(GroupPtr parent, std::vector<int> elements);

  /// Subgroup generated by `generators`.
  static Subgroup generated(GroupPtr parent, std::span<const int> generators);

  const GroupTable& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(int g) const;
  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }

 private:
  GroupPtr parent_;
  std::vector<int> elements_;
};

/// Closure of a generating set under the parent's product, as a sorted list.
std::vector<int> generated_elements(const GroupTable& g, std::span<const int> generators);

/// rad(X) = {h : hX = Xh = X} for a sorted element set X.
std::vector<int> set_radical(const GroupTable& g, std::span<const int> set);

/// Sorted intersection of two sorted element sets.
std::vector<int> intersect_sorted(std::span<const int> a, std::span<const int> b);

struct PaperGroupOptions {
  /// Generators of the three order-p subgroups inside Z_p^2, pairwise non-collinear.
  std::array<std::array<int, 2>, 3> lines{{{1, 0}, {0, 1}, {1, 1}}};
  /// The three involutions of Z_2^2, pairwise distinct and nonzero.
  std::array<std::array<int, 2>, 3> involutions{{{1, 0}, {0, 1}, {1, 1}}};
  int max_p = 13;
  bool override_max_p = false;
};

/// G = C2 x C2 x Cp x Cp with the distinguished subsets of the construction.
/// Element (x1, x2, y1, y2) is stored at index ((x1*2 + x2)*p + y1)*p + y2.
struct PaperGroupBundle {
  int p = 0;
  GroupPtr group;
  std::vector<int> klein;   // the C2 x C2 factor, order 4
  std::vector<int> p_part;  // the Cp x Cp factor, order p^2
  std::array<int, 3> involutions{};
  std::array<std::vector<int>, 3> lines;        // order-p subgroups of p_part
  std::array<std::vector<int>, 3> line_cosets;  // lines[i] * involutions[i]
  std::array<std::vector<int>, 3> blocks;       // p_part * involutions[i]

  int encode(int x1, int x2, int y1, int y2) const;
  std::array<int, 4> decode(int g) const;
};

bool is_prime(int n);

/// Throws std::invalid_argument for non-prime p, p < 5, or p above the
/// configured maximum without the override.
void check_prime_parameter(int p, int max_p = 13, bool override_max_p = false);

PaperGroupBundle build_paper_group(int p, const PaperGroupOptions& options = {});

/// Automorphism of G acting on C2 x C2 by the 2x2 matrix m2 over Z_2 and on
/// Cp x Cp by mp over Z_p (row-major, acting on column vectors). Returns the
/// element map; throws std::invalid_argument if either matrix is singular.
std::vector<int> linear_automorphism(const PaperGroupBundle& bundle, std::array<int, 4> m2, std::array<int, 4> mp);

/// Structural invariants of a bundle: coset products, trivial line
/// intersections, inverse-closed cosets, radicals, and block decomposition.
Report check_bundle(const PaperGroupBundle& bundle);

enum class CandidateKind { c2p_x_c2p, c2p_x_d2p, d2p_x_d2p, cp2_semidirect_c2_x_c2 };

inline constexpr std::array<CandidateKind, 4> kAllCandidateKinds{
    CandidateKind::c2p_x_c2p, CandidateKind::c2p_x_d2p, CandidateKind::d2p_x_d2p,
    CandidateKind::cp2_semidirect_c2_x_c2};

std::string_view candidate_name(CandidateKind kind);
CandidateKind parse_candidate_kind(std::string_view name);

/// The groups of order 4p^2 with a normal Cp x Cp and quotient C2 x C2.
GroupTable build_candidate_group(CandidateKind kind, int p);

/// Element order -> number of elements of that order.
std::map<int, int> order_census(const GroupTable& g);

struct SylowInfo {
  int prime = 0;
  int subgroup_order = 0;
  std::vector<std::vector<int>> subgroups;  // sorted element sets, sorted
  int count() const { return static_cast<int>(subgroups.size()); }
};

/// All Sylow p-subgroups, found by growing one maximal p-subgroup and taking
/// its conjugates. Throws if p does not divide the order.
SylowInfo sylow_subgroups(const GroupTable& g, int p);

}  // namespace ccs
