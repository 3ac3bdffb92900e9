#include "ccs/automorphism.hpp"

#include <stdexcept>

#include "refinement.hpp"

namespace ccs {

namespace {

std::vector<int> orbit_under(int degree, const std::vector<Permutation>& gens, int point) {
  std::vector<char> seen(degree, 0);
  std::vector<int> orbit{point};
  seen[point] = 1;
  for (std::size_t h = 0; h < orbit.size(); ++h)
    for (const auto& s : gens)
      if (!seen[s[orbit[h]]]) {
        seen[s[orbit[h]]] = 1;
        orbit.push_back(s[orbit[h]]);
      }
  return orbit;
}

}  // namespace

PermGroup automorphism_group(const Scheme& scheme, const PermGroup* seed, long long budget, SearchStats* stats) {
  const int n = scheme.degree();
  std::vector<Permutation> gens;
  if (seed) {
    if (seed->degree() != n) throw std::invalid_argument("seed group has the wrong degree");
    for (const auto& g : seed->generators()) {
      if (!is_automorphism(scheme, g)) throw std::invalid_argument("seed contains a non-automorphism");
      gens.push_back(g);
    }
  }

  detail::PairRefiner refiner(n, scheme.colors(), scheme.colors(), budget);
  struct Step {
    detail::RefinedNode node;
    int cell;
    int point;
  };
  std::vector<Step> path;
  auto node = refiner.root();
  while (!refiner.is_discrete(node)) {
    const int cell = refiner.target_cell(node);
    const int x = refiner.cell_points(node.src, cell).front();
    path.push_back({node, cell, x});
    node = refiner.individualize(node, x, x);
  }
  std::vector<int> base;
  for (const auto& s : path) base.push_back(s.point);

  PermGroup known(n, gens, base);
  int found_count = 0;
  for (int i = static_cast<int>(path.size()) - 1; i >= 0; --i) {
    const Step& step = path[i];
    std::vector<char> failed(n, 0);
    for (int gamma : refiner.cell_points(step.node.dst, step.cell)) {
      if (gamma == step.point || failed[gamma] || known.in_level_orbit(i, gamma)) continue;
      auto child = refiner.individualize(step.node, step.point, gamma);
      auto found = refiner.search(child);
      if (found) {
        known = known.with_generator(*found);
        ++found_count;
      } else {
        for (int x : orbit_under(n, known.level_generators(i), gamma)) failed[x] = 1;
      }
    }
  }
  if (stats) {
    stats->nodes = refiner.nodes();
    stats->generators_found = found_count;
  }
  return known;
}

SchurityResult is_schurian(const Scheme& scheme, const PermGroup* seed, long long budget) {
  SchurityResult r;
  r.aut = automorphism_group(scheme, seed, budget);
  const Scheme orbitals = two_orbit_partition(r.aut);
  r.orbit_rank = orbitals.rank();
  const int n = scheme.degree();
  std::vector<int> first(scheme.rank(), -1);
  std::vector<char> split(scheme.rank(), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int s = scheme.color(a, b);
      const int o = orbitals.color(a, b);
      if (first[s] < 0) first[s] = o;
      else if (first[s] != o) split[s] = 1;
    }
  for (int s = 0; s < scheme.rank(); ++s)
    if (split[s]) {
      r.witness_color = s;
      r.witness_size = scheme.size(s);
      break;
    }
  r.schurian = r.witness_color < 0;
  return r;
}

FixedPointResult verify_fixed_point_lemma(const Scheme& scheme, const Parabolic& parabolic, const Permutation& f) {
  if (!is_automorphism(scheme, f)) throw std::invalid_argument("map is not an automorphism of the scheme");
  if (!parabolic.is_thin(scheme)) throw std::invalid_argument("parabolic is not thin");
  FixedPointResult r;
  r.hypothesis = true;
  for (const auto& cls : parabolic.classes()) {
    bool fixed = false;
    for (int x : cls) fixed = fixed || f[x] == x;
    r.hypothesis = r.hypothesis && fixed;
  }
  r.is_identity = f.is_identity();
  return r;
}

}  // namespace ccs
