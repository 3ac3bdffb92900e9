#include "doctest.h"

#include <numeric>

#include "ccs/automorphism.hpp"
#include "ccs/schur_ring.hpp"
#include "oracles.hpp"

using namespace ccs;

namespace {

Scheme paper_scheme(int p, FusionLevel l = FusionLevel::full()) {
  return cayley_scheme(fusion_partition(build_paper_group(p), l));
}

Permutation cycle(int n, std::vector<int> points) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (std::size_t k = 0; k < points.size(); ++k) img[points[k]] = points[(k + 1) % points.size()];
  return Permutation(img);
}

}  // namespace

TEST_CASE("permutations act on the right") {
  const Permutation a({1, 2, 0}), b({1, 0, 2});
  const Permutation ab = a * b;
  for (int x = 0; x < 3; ++x) CHECK(ab[x] == b[a[x]]);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.num_fixed_points() == 0);
  CHECK(b.num_fixed_points() == 1);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("symmetric and cyclic groups") {
  const auto s5 = PermGroup::symmetric(5);
  CHECK(s5.order() == 120);
  CHECK(s5.verify().ok());
  CHECK(s5.elements().size() == 120);
  CHECK(PermGroup::trivial(4).order() == 1);
  const PermGroup c5(5, {cycle(5, {0, 1, 2, 3, 4})});
  CHECK(c5.order() == 5);
  CHECK_FALSE(c5.contains(cycle(5, {0, 1})));
  CHECK(c5.contains(cycle(5, {0, 2, 4, 1, 3})));
  CHECK(regularity_class(c5) == Regularity::regular);
  CHECK(regularity_class(s5) == Regularity::transitive_nonregular);
  const PermGroup c5on7(7, {cycle(7, {0, 1, 2, 3, 4})});
  CHECK(regularity_class(c5on7) == Regularity::other);
  const PermGroup klein_like(4, {Permutation({1, 0, 3, 2})});
  CHECK(regularity_class(klein_like) == Regularity::semiregular_intransitive);
  CHECK(regularity_name(Regularity::semiregular_intransitive) == "semiregular-intransitive");
}

TEST_CASE("chain orders equal enumeration by closure") {
  const auto b = build_paper_group(5);
  const auto t = right_translations(*b.group);
  CHECK(t.order() == 100);
  CHECK(oracle::closure(100, t.generators()).size() == 100);
  const auto seed = right_translations(*b.group);
  const auto a = automorphism_group(paper_scheme(5), &seed);
  CHECK(a.order() == 100);
  CHECK(oracle::closure(100, a.generators()).size() == 100);
  const auto a1 = automorphism_group(paper_scheme(5, FusionLevel::single(0)), &seed);
  CHECK(a1.order() == 2500);
  CHECK(oracle::closure(100, a1.generators()).size() == 2500);
  CHECK(a1.elements().size() == 2500);
  const PermGroup d(6, {cycle(6, {0, 1, 2, 3, 4, 5}), Permutation({0, 5, 4, 3, 2, 1})});
  CHECK(d.order() == 12);
  CHECK(oracle::closure(6, d.generators()).size() == 12);
}

TEST_CASE("every automorphism generator preserves every color") {
  const auto b = build_paper_group(5);
  const auto seed = right_translations(*b.group);
  for (const auto& l : all_fusion_levels()) {
    const Scheme x = paper_scheme(5, l);
    const auto a = automorphism_group(x, &seed);
    CHECK(a.verify().ok());
    for (const auto& g : a.generators()) CHECK(is_automorphism(x, g));
  }
}

TEST_CASE("automorphism orders with and without the translation seed") {
  const auto b = build_paper_group(5);
  const auto seed = right_translations(*b.group);
  const Scheme x = paper_scheme(5);
  CHECK(automorphism_group(x, &seed).order() == 100);
  CHECK(automorphism_group(x).order() == 100);
  CHECK(automorphism_group(paper_scheme(5, FusionLevel::single(1))).order() == 2500);
  CHECK(automorphism_group(paper_scheme(5, FusionLevel::pair(0, 1)), &seed).order() == 62500);
  CHECK(automorphism_group(paper_scheme(5, FusionLevel::zero()), &seed).order() == 1562500);
  CHECK(regularity_class(automorphism_group(x)) == Regularity::regular);
}

TEST_CASE("rank-2 scheme has the full symmetric group") {
  const Scheme k = Scheme::from_colors(6, [] {
    std::vector<int> c(36, 1);
    for (int i = 0; i < 6; ++i) c[i * 6 + i] = 0;
    return c;
  }());
  CHECK(automorphism_group(k).order() == 720);
  CHECK(two_orbit_partition(PermGroup::symmetric(6)).rank() == 2);
}

TEST_CASE("a seed that is not an automorphism is rejected") {
  const Scheme x = paper_scheme(5);
  const PermGroup bad(100, {cycle(100, {0, 1})});
  CHECK_THROWS_AS(automorphism_group(x, &bad), std::invalid_argument);
}

TEST_CASE("an exhausted budget raises") {
  CHECK_THROWS_AS(automorphism_group(paper_scheme(5, FusionLevel::zero()), nullptr, 3), SearchBudgetExceeded);
}

TEST_CASE("2-orbits of the translations form the regular scheme") {
  const auto b = build_paper_group(5);
  const Scheme o = two_orbit_partition(right_translations(*b.group));
  CHECK(o.rank() == 100);
  CHECK(o == regular_scheme(*b.group));
  CHECK(is_wl_stable(o.degree(), o.colors()));
}

TEST_CASE("schurity") {
  for (int p : {5, 7}) {
    const auto s = is_schurian(paper_scheme(p));
    CHECK_FALSE(s.schurian);
    CHECK(s.witness_size == 4LL * p * p * p);
    CHECK(s.orbit_rank == 4 * p * p);
  }
  CHECK(is_schurian(paper_scheme(5, FusionLevel::zero())).schurian);
  CHECK(is_schurian(paper_scheme(5, FusionLevel::single(2))).schurian);
  CHECK(is_schurian(regular_scheme(GroupTable::dihedral(5))).schurian);
}

TEST_CASE("group intersection: both methods agree") {
  const auto b = build_paper_group(5);
  const auto seed = right_translations(*b.group);
  auto aut = [&](FusionLevel l) { return automorphism_group(paper_scheme(5, l), &seed); };
  const auto a1 = aut(FusionLevel::single(0)), a2 = aut(FusionLevel::single(1));
  const auto a12 = aut(FusionLevel::pair(0, 1)), a13 = aut(FusionLevel::pair(0, 2));
  for (auto m : {IntersectionMethod::enumerate, IntersectionMethod::backtrack, IntersectionMethod::automatic}) {
    CHECK(group_intersection(a1, a2, m).order() == 100);
    CHECK(group_intersection(a1, a1, m).order() == 2500);
  }
  CHECK(group_intersection(a12, a13, IntersectionMethod::backtrack).order() == 2500);
  CHECK(group_intersection(a12, a13).order() == 2500);
  CHECK_THROWS_AS(group_intersection(a1, PermGroup::trivial(5)), std::invalid_argument);
}

TEST_CASE("random elements are deterministic and belong to the group") {
  const auto b = build_paper_group(5);
  const auto seed = right_translations(*b.group);
  const auto a0 = automorphism_group(paper_scheme(5, FusionLevel::zero()), &seed);
  std::mt19937_64 r1(7), r2(7);
  for (int k = 0; k < 10; ++k) {
    const auto g = a0.random_element(r1);
    CHECK(g == a0.random_element(r2));
    CHECK(a0.contains(g));
  }
}

TEST_CASE("with_base keeps the group") {
  const auto b = build_paper_group(5);
  const auto seed = right_translations(*b.group);
  const auto a1 = automorphism_group(paper_scheme(5, FusionLevel::single(0)), &seed);
  const auto r = a1.with_base({17, 3});
  CHECK(r.order() == a1.order());
  CHECK(r.base()[0] == 17);
  CHECK(r.verify().ok());
}

TEST_CASE("automorphisms fixing a point of every thin-radical class are trivial") {
  const Scheme x = paper_scheme(5);
  const auto rad = thin_radical(x, intersection_tensor(x));
  const auto aut = automorphism_group(x);
  int hypothesis = 0;
  for (const auto& f : aut.elements()) {
    const auto r = verify_fixed_point_lemma(x, rad.closure, f);
    CHECK(r.holds());
    hypothesis += r.hypothesis;
  }
  CHECK(hypothesis == 1);  // only the identity fixes a point in every class
  const auto id = verify_fixed_point_lemma(x, rad.closure, Permutation::identity(100));
  CHECK(id.hypothesis);
  CHECK(id.is_identity);
  const auto b = build_paper_group(5);
  const auto translations = right_translations(*b.group);
  for (const auto& t : translations.generators())
    CHECK_FALSE(verify_fixed_point_lemma(x, rad.closure, t).hypothesis);
  CHECK_THROWS_AS(verify_fixed_point_lemma(x, rad.closure, cycle(100, {0, 1})), std::invalid_argument);
  std::vector<int> all(x.rank());
  std::iota(all.begin(), all.end(), 0);
  const Parabolic everything(x, all);
  CHECK_FALSE(everything.is_thin(x));
  CHECK_THROWS_AS(verify_fixed_point_lemma(x, everything,
                                           Permutation::identity(100)),
                  std::invalid_argument);
}

TEST_CASE("point stabilizers of Aut(X) are trivial") {
  const auto aut = automorphism_group(paper_scheme(5));
  for (int x = 0; x < 100; ++x) {
    const auto g = aut.with_base({x});
    CHECK(g.level_orbit(0).size() == 100);
    BigInt rest = 1;
    for (int k = 1; k < g.num_levels(); ++k) rest *= g.level_orbit(k).size();
    CHECK(rest == 1);
  }
}
