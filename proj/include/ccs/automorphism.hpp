#pragma once

#include "ccs/permutation.hpp"
#include "ccs/scheme.hpp"

namespace ccs {

inline constexpr long long kDefaultSearchBudget = 200'000;

struct SearchStats {
  long long nodes = 0;
  int generators_found = 0;
};

/// Color-preserving permutations of the scheme, by individualization and
/// refinement along one base path, with every level's orbit completed by
/// searching for automorphisms that reach the missing points. `seed` holds
/// known automorphisms (for example right translations of a Cayley scheme)
/// and only prunes. Throws std::invalid_argument if a seed generator is not
/// an automorphism and SearchBudgetExceeded if the node budget runs out.
PermGroup automorphism_group(const Scheme& scheme, const PermGroup* seed = nullptr,
                             long long budget = kDefaultSearchBudget, SearchStats* stats = nullptr);

struct SchurityResult {
  bool schurian = false;
  int witness_color = -1;      // a color that is not a single 2-orbit
  long long witness_size = 0;  // number of pairs in that color
  int orbit_rank = 0;          // rank of the 2-orbit partition of Aut
  PermGroup aut;
};

SchurityResult is_schurian(const Scheme& scheme, const PermGroup* seed = nullptr,
                           long long budget = kDefaultSearchBudget);

struct FixedPointResult {
  bool hypothesis = false;  // f fixes a point in every class
  bool is_identity = false;
  bool holds() const { return !hypothesis || is_identity; }
};

/// Throws std::invalid_argument if f is not an automorphism or the parabolic
/// is not thin.
FixedPointResult verify_fixed_point_lemma(const Scheme& scheme, const Parabolic& parabolic, const Permutation& f);

}  // namespace ccs
