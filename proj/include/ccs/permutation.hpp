#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ccs/group_table.hpp"
#include "ccs/report.hpp"
#include "ccs/scheme.hpp"

namespace ccs {

using BigInt = boost::multiprecision::cpp_int;

/// A bijection of 0..n-1 acting on the right: x^(gh) = (x^g)^h.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument if `images` is not a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  /// Apply *this first, then `other`.
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  int num_fixed_points() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Preserves every color of the scheme (exhaustive over all pairs).
bool is_automorphism(const Scheme& scheme, const Permutation& g);

/// Permutation group with a stabilizer chain built by deterministic
/// Schreier-Sims. The base starts with the requested prefix (points may be
/// redundant there) and is extended by the smallest moved point.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_prefix = {});

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& base() const { return base_; }
  int num_levels() const { return static_cast<int>(base_.size()); }
  /// Orbit of base point k under the pointwise stabilizer of base[0..k).
  const std::vector<int>& level_orbit(int k) const { return levels_[k].orbit; }
  bool in_level_orbit(int k, int point) const { return levels_[k].rep[point] >= 0; }
  /// Element fixing base[0..k) that maps base[k] to `point` (in the level orbit).
  const Permutation& transversal(int k, int point) const { return levels_[k].reps[levels_[k].rep[point]]; }
  /// Strong generators fixing base[0..k).
  const std::vector<Permutation>& level_generators(int k) const { return levels_[k].gens; }

  BigInt order() const;
  bool contains(const Permutation& g) const;
  /// All elements in a canonical order; throws if the order exceeds `limit`.
  std::vector<Permutation> elements(std::uint64_t limit = 1'000'000) const;
  Permutation random_element(std::mt19937_64& rng) const;

  /// Point orbits, each sorted, ordered by least point.
  std::vector<std::vector<int>> orbits() const;
  /// Orbit representative (union-find root) of every point under `gens`.
  static std::vector<int> orbit_labels(int degree, std::span<const Permutation> gens);

  /// Same group, chain rebuilt with `prefix` as the start of the base.
  PermGroup with_base(std::vector<int> prefix) const;
  /// Same base prefix, one more generator.
  PermGroup with_generator(const Permutation& g) const;

  /// Every Schreier generator at every level sifts to the identity, and
  /// every transversal element maps its base point as recorded.
  Report verify() const;

  /// Residue of g after sifting and the level where sifting stopped
  /// (num_levels() when it went through).
  std::pair<Permutation, int> sift(const Permutation& g, int start = 0) const;

 private:
  struct Level {
    int point = -1;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<int> rep;                  // point -> index into reps, -1 outside the orbit
    std::vector<Permutation> reps, inv_reps;
  };

  void build(std::vector<int> prefix);
  void compute_orbit(int k);
  int moved_point_not_in_base(const Permutation& g) const;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

/// x -> x y for every y, generated from a small generating set of the group.
PermGroup right_translations(const GroupTable& group);

/// Partition of pairs into orbits of the diagonal action.
Scheme two_orbit_partition(const PermGroup& group);

enum class Regularity { regular, semiregular_intransitive, transitive_nonregular, other };
std::string_view regularity_name(Regularity r);
Regularity regularity_class(const PermGroup& group);

enum class IntersectionMethod { automatic, enumerate, backtrack };

/// a ∩ b. The automatic method enumerates the smaller group when its order is
/// at most 10^4 and runs the chain backtrack otherwise.
PermGroup group_intersection(const PermGroup& a, const PermGroup& b,
                             IntersectionMethod method = IntersectionMethod::automatic);

}  // namespace ccs
