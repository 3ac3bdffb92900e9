#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccs/automorphism.hpp"
#include "ccs/group_table.hpp"
#include "ccs/report.hpp"
#include "ccs/scheme.hpp"

namespace ccs {

/// Image of every source color under a candidate algebraic isomorphism.
using ColorBijection = std::vector<int>;

/// Valencies, transposes and every intersection number are preserved
/// (exhaustive over all entries of both tensors).
bool preserves_tensor(std::span<const int> phi, const IntersectionTensor& src, const IntersectionTensor& dst);

struct AlgebraicSearchStats {
  long long nodes = 0;
};

/// All algebraic isomorphisms src -> dst in lexicographic order. Colors
/// start with the candidates sharing valency, diagonal and symmetry flags and
/// row/column value profiles; the search assigns the color with the fewest
/// candidates first and narrows the rest with every exact equality implied by
/// the assigned pairs.
std::vector<ColorBijection> enumerate_algebraic_isos(const IntersectionTensor& src, const IntersectionTensor& dst,
                                                     AlgebraicSearchStats* stats = nullptr);

enum class InduceStatus { found, not_found, inconclusive };
std::string_view induce_status_name(InduceStatus s);

struct InduceResult {
  InduceStatus status = InduceStatus::not_found;
  std::optional<Permutation> map;  // point bijection x -> y with s^map = s^phi
  long long nodes = 0;
};

/// Point bijection carrying each color s of x onto color phi(s) of y.
/// `not_found` means the search was exhausted; `inconclusive` means the
/// budget ran out first. Throws std::invalid_argument if phi is not a color
/// bijection between the two schemes.
InduceResult find_inducing_isomorphism(std::span<const int> phi, const Scheme& x, const Scheme& y,
                                       long long budget = kDefaultSearchBudget);

struct AuditWitness {
  ColorBijection phi;
  std::vector<int> point_map;  // empty unless induced
  InduceStatus status = InduceStatus::not_found;
};

struct SeparabilityAudit {
  int algebraic_automorphism_count = 0;
  int induced_count = 0;
  int inconclusive_count = 0;
  int failure_count = 0;
  int searches = 0;  // maps that needed their own search
  std::vector<AuditWitness> witnesses;  // in enumeration order
  bool ok() const { return induced_count == algebraic_automorphism_count; }
};

/// Enumerates the algebraic automorphisms of the scheme's tensor and tries to
/// induce each one. Maps already generated by earlier witnesses reuse the
/// composed point map instead of a new search.
SeparabilityAudit separability_audit(const Scheme& scheme, long long budget = kDefaultSearchBudget);

struct RecoveredGroup {
  std::shared_ptr<const GroupTable> group;  // identity is point 0
  std::string label;                        // candidate name or "unclassified"
  std::optional<CandidateKind> kind;
  std::map<int, int> census;
  int involutions = 0;
  /// Involution bound through the symmetric colors and the analysis of the
  /// subgroups generated by their basic sets.
  Report analysis;
};

/// Realizes the points as the regular group Aut(scheme), x * y = x^{t_y}
/// with t_y the automorphism taking 0 to y, and classifies it by element
/// order census against the four groups of order 4p^2. Throws
/// std::invalid_argument if Aut is not regular.
RecoveredGroup recover_group_of_regular_scheme(const Scheme& scheme, const PermGroup* seed = nullptr,
                                               long long budget = kDefaultSearchBudget);

}  // namespace ccs
