#include "doctest.h"

#include <numeric>

#include "ccs/algebraic_iso.hpp"
#include "ccs/schur_ring.hpp"
#include "oracles.hpp"

using namespace ccs;

namespace {

Scheme paper_scheme(int p, FusionLevel l = FusionLevel::full()) {
  return cayley_scheme(fusion_partition(build_paper_group(p), l));
}

std::vector<int> identity_map(int r) {
  std::vector<int> id(r);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

}  // namespace

TEST_CASE("algebraic automorphisms of the scheme match the linear-automorphism count") {
  for (int p : {5, 7}) {
    const auto b = build_paper_group(p);
    const Scheme x = cayley_scheme(paper_partition(b));
    const auto t = intersection_tensor(x);
    const auto phis = enumerate_algebraic_isos(t, t);
    CHECK(phis.size() == static_cast<std::size_t>(oracle::linear_automorphisms_preserving(b, paper_partition(b))));
    CHECK(std::is_sorted(phis.begin(), phis.end()));
    CHECK(phis.front() == identity_map(x.rank()));
    for (const auto& phi : phis) CHECK(preserves_tensor(phi, t, t));
  }
}

TEST_CASE("algebraic automorphisms of a regular scheme are the group automorphisms") {
  const GroupTable g = GroupTable::direct_product(GroupTable::cyclic(10), GroupTable::cyclic(10));
  const auto t = intersection_tensor(regular_scheme(g));
  const int expected = oracle::abelian_two_generator_automorphisms(g, 10, 1, 10);
  CHECK(expected == 2880);
  CHECK(enumerate_algebraic_isos(t, t).size() == static_cast<std::size_t>(expected));
}

TEST_CASE("no algebraic isomorphism between different tensors") {
  const auto c4 = intersection_tensor(regular_scheme(GroupTable::cyclic(4)));
  const auto v4 = intersection_tensor(regular_scheme(
      GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2))));
  CHECK(enumerate_algebraic_isos(c4, v4).empty());
  CHECK(enumerate_algebraic_isos(c4, c4).size() == 2);
  CHECK(enumerate_algebraic_isos(v4, v4).size() == 6);
  const auto x = intersection_tensor(paper_scheme(5));
  const auto x0 = intersection_tensor(paper_scheme(5, FusionLevel::zero()));
  CHECK(enumerate_algebraic_isos(x, x0).empty());
}

TEST_CASE("preserves_tensor rejects a non-algebraic bijection") {
  const auto t = intersection_tensor(paper_scheme(5));
  auto phi = identity_map(t.rank());
  // swap a singleton color with a valency-p color
  int thin = -1, thick = -1;
  for (int s = 1; s < t.rank(); ++s) {
    if (t.valency(s) == 1 && thin < 0) thin = s;
    if (t.valency(s) == 5 && thick < 0) thick = s;
  }
  std::swap(phi[thin], phi[thick]);
  CHECK_FALSE(preserves_tensor(phi, t, t));
  // swapping two thin colors that are not related by an automorphism
  phi = identity_map(t.rank());
  std::swap(phi[1], phi[2]);
  bool found = false;
  for (const auto& psi : enumerate_algebraic_isos(t, t)) found = found || psi == phi;
  CHECK(preserves_tensor(phi, t, t) == found);
}

TEST_CASE("inducing isomorphisms") {
  const Scheme x = paper_scheme(5);
  const auto id = identity_map(x.rank());
  const auto r = find_inducing_isomorphism(id, x, x);
  REQUIRE(r.status == InduceStatus::found);
  for (int a = 0; a < 100; ++a)
    for (int b = 0; b < 100; ++b) REQUIRE(x.color((*r.map)[a], (*r.map)[b]) == x.color(a, b));
  auto bad = id;
  std::swap(bad[1], bad[30]);
  CHECK_THROWS_AS(find_inducing_isomorphism(bad, x, x), std::invalid_argument);
  CHECK_THROWS_AS(find_inducing_isomorphism(std::vector<int>{0, 1}, x, x), std::invalid_argument);
}

TEST_CASE("an exhausted budget is inconclusive, not a failure") {
  const Scheme x = paper_scheme(5, FusionLevel::zero());
  const auto t = intersection_tensor(x);
  const auto phis = enumerate_algebraic_isos(t, t);
  REQUIRE(phis.size() > 1);
  const auto r = find_inducing_isomorphism(phis.back(), x, x, 1);
  CHECK(r.status == InduceStatus::inconclusive);
  CHECK_FALSE(r.map.has_value());
  CHECK(induce_status_name(r.status) == "inconclusive");
}

TEST_CASE("separability audit") {
  const Scheme x = paper_scheme(5);
  const auto a = separability_audit(x);
  CHECK(a.algebraic_automorphism_count == 24);
  CHECK(a.induced_count == 24);
  CHECK(a.inconclusive_count == 0);
  CHECK(a.failure_count == 0);
  CHECK(a.ok());
  for (const auto& w : a.witnesses) {
    REQUIRE(w.status == InduceStatus::found);
    // composing phi with the inverse of the induced color map is the identity
    std::vector<int> induced(x.rank());
    for (int s = 0; s < x.rank(); ++s) {
      const auto [u, v] = x.least_pair(s);
      induced[s] = x.color(w.point_map[u], w.point_map[v]);
    }
    CHECK(induced == w.phi);
    for (int u = 0; u < 100; ++u)
      for (int v = 0; v < 100; ++v) REQUIRE(x.color(w.point_map[u], w.point_map[v]) == w.phi[x.color(u, v)]);
  }
  const Scheme k = Scheme::from_colors(5, [] {
    std::vector<int> c(25, 1);
    for (int i = 0; i < 5; ++i) c[i * 5 + i] = 0;
    return c;
  }());
  const auto ak = separability_audit(k);
  CHECK(ak.algebraic_automorphism_count == 1);
  CHECK(ak.induced_count == 1);
}

TEST_CASE("separability audit of the fusions") {
  for (const auto& l : all_fusion_levels()) {
    CAPTURE(l.name());
    const auto a = separability_audit(paper_scheme(5, l));
    CHECK(a.ok());
    CHECK(a.inconclusive_count == 0);
  }
  CHECK(separability_audit(paper_scheme(5, FusionLevel::zero())).algebraic_automorphism_count == 2880);
}

TEST_CASE("group recovery from regular schemes") {
  const auto g = recover_group_of_regular_scheme(paper_scheme(5));
  CHECK(g.label == "C2pxC2p");
  CHECK(g.involutions == 3);
  CHECK_MESSAGE(g.analysis.ok(), g.analysis.first_failure());
  CHECK(g.group->check_axioms().ok());
  for (auto kind : kAllCandidateKinds) {
    CAPTURE(candidate_name(kind));
    const GroupTable h = build_candidate_group(kind, 5);
    const auto r = recover_group_of_regular_scheme(regular_scheme(h));
    CHECK(r.kind == kind);
    CHECK(r.census == order_census(h));
    CHECK(r.involutions == oracle::involutions(h));
    // the same group from the 2-orbits of its regular action
    const auto o = recover_group_of_regular_scheme(two_orbit_partition(right_translations(h)));
    CHECK(o.census == order_census(h));
    CHECK(sylow_subgroups(*o.group, 5).count() == sylow_subgroups(h, 5).count());
  }
  CHECK(recover_group_of_regular_scheme(regular_scheme(build_candidate_group(CandidateKind::c2p_x_d2p, 5)))
            .involutions == 11);
  CHECK_THROWS_AS(recover_group_of_regular_scheme(paper_scheme(5, FusionLevel::zero())), std::invalid_argument);
  const auto other = recover_group_of_regular_scheme(regular_scheme(GroupTable::cyclic(12)));
  CHECK(other.label == "unclassified");
  CHECK_FALSE(other.kind.has_value());
}
