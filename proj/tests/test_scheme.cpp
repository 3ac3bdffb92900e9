#include "doctest.h"

#include <map>

#include "ccs/schur_ring.hpp"
#include "oracles.hpp"

using namespace ccs;

namespace {

std::vector<int> graph_coloring(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> c(static_cast<std::size_t>(n) * n, 2);
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i) * n + i] = 0;
  for (auto [a, b] : edges) c[static_cast<std::size_t>(a) * n + b] = c[static_cast<std::size_t>(b) * n + a] = 1;
  return c;
}

Scheme paper_scheme(int p, FusionLevel l = FusionLevel::full()) {
  return cayley_scheme(fusion_partition(build_paper_group(p), l));
}

}  // namespace

TEST_CASE("construction: degree, rank and valencies") {
  for (int p : {5, 7}) {
    const Scheme x = paper_scheme(p);
    CHECK(x.degree() == 4 * p * p);
    CHECK(x.rank() == p * p + 3 * p);
    CHECK(x.is_association_scheme());
    std::map<int, int> v;
    for (int s = 0; s < x.rank(); ++s) ++v[x.valency(s)];
    CHECK(v == std::map<int, int>{{1, p * p}, {p, 3 * p}});
    long long total = 0;
    for (int s = 0; s < x.rank(); ++s) total += x.valency(s);
    CHECK(total == x.degree());
  }
}

TEST_CASE("the Cayley scheme is a WL fixpoint") {
  const Scheme x = paper_scheme(5);
  CHECK(is_wl_stable(x.degree(), x.colors()));
  WlStats st;
  const Scheme w = wl_stabilize(x.degree(), x.colors(), &st);
  CHECK(w == x);
  CHECK(st.initial_rank == 40);
  CHECK(st.final_rank == 40);
  CHECK(Scheme::from_colors(x.degree(), std::vector<int>(x.colors().begin(), x.colors().end())) == x);
}

TEST_CASE("WL on a cycle gives the distance scheme and is idempotent") {
  const int n = 9;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  const auto c = graph_coloring(n, edges);
  CHECK_FALSE(is_wl_stable(n, c));
  WlStats st;
  const Scheme w = wl_stabilize(n, c, &st);
  CHECK(w.rank() == n / 2 + 1);
  CHECK(st.initial_rank == 3);
  CHECK(is_wl_stable(n, w.colors()));
  CHECK(wl_stabilize(n, w.colors()) == w);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int d = std::min((a - b + n) % n, (b - a + n) % n);
      CHECK(w.color(a, b) == w.color(0, d));
    }
}

TEST_CASE("WL on a path splits the diagonal") {
  const auto c = graph_coloring(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(Scheme::from_colors(4, c), std::invalid_argument);
  const Scheme w = wl_stabilize(4, c);
  CHECK(w.num_diagonal_colors() == 2);
  CHECK_FALSE(w.is_association_scheme());
  CHECK(intersection_tensor(w).check_identities().ok());
}

TEST_CASE("canonical numbering: diagonal first, then valency and least pair") {
  const Scheme x = paper_scheme(5);
  CHECK(x.color(0, 0) == 0);
  CHECK(x.is_diagonal(0));
  for (int s = 2; s < x.rank(); ++s) {
    const bool ordered = x.valency(s - 1) < x.valency(s) ||
                         (x.valency(s - 1) == x.valency(s) && x.least_pair(s - 1) < x.least_pair(s));
    CHECK(ordered);
  }
  // relabeling the input does not change the output
  std::vector<int> shuffled(x.colors().begin(), x.colors().end());
  for (int& v : shuffled) v = 1000 - 3 * v;
  CHECK(Scheme::from_colors(x.degree(), shuffled) == x);
}

TEST_CASE("tensor entries equal brute-force path counts over all pairs") {
  const Scheme x = paper_scheme(5);
  const auto t = intersection_tensor(x);
  long long pairs = 0;
  CHECK(oracle::path_counts_agree(x, [&](int s, int k, int u) { return t(s, k, u); }, &pairs));
  CHECK(pairs == 10'000);
  CHECK(t.entries().size() == 2500);
  CHECK(t.check_identities().ok());
  CHECK(t.is_commutative());
}

TEST_CASE("tensor identities on the fusions and on a non-homogeneous configuration") {
  for (const auto& l : all_fusion_levels()) {
    const auto t = intersection_tensor(paper_scheme(5, l));
    CHECK(t.check_identities().ok());
  }
  const Scheme w = wl_stabilize(5, graph_coloring(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
  const auto t = intersection_tensor(w);
  CHECK(t.check_identities().ok());
  CHECK(oracle::path_counts_agree(w, [&](int s, int k, int u) { return t(s, k, u); }));
}

TEST_CASE("tensor intersection numbers from the Schur ring") {
  const auto b = build_paper_group(5);
  const auto s = paper_partition(b);
  const Scheme x = cayley_scheme(s);
  const auto t = intersection_tensor(x);
  const auto sc = structure_constants(s);
  const auto colors = set_colors(x, s);
  for (const auto& e : sc.entries()) CHECK(t(colors[e.x], colors[e.y], colors[e.z]) == e.c);
}

TEST_CASE("B1-B3 hold exhaustively and fail on the regular scheme") {
  for (int p : {5, 7}) {
    const auto r = verify_B_properties(paper_scheme(p));
    CHECK_MESSAGE(r.report.ok(), r.report.first_failure());
    CHECK(r.symmetric_colors[0] >= 0);
  }
  const auto reg = verify_B_properties(regular_scheme(build_candidate_group(CandidateKind::c2p_x_c2p, 5)));
  CHECK_FALSE(reg.report.ok());
  CHECK_FALSE(reg.report.passed("B1.thin_radical_is_CpxCp"));
  CHECK_FALSE(reg.report.passed("B2.symmetric_valency_p"));
}

TEST_CASE("thin radical, quotient and radicals of the symmetric colors") {
  const Scheme x = paper_scheme(5);
  const auto t = intersection_tensor(x);
  const auto rad = thin_radical(x, t);
  CHECK(rad.colors.size() == 25);
  CHECK(rad.closure.num_classes() == 4);
  CHECK(rad.closure.is_thin(x));
  const Scheme q = quotient_scheme(x, rad.closure);
  CHECK(q.degree() == 4);
  CHECK(q.rank() == 4);
  const auto b = build_paper_group(5);
  for (int i = 0; i < 3; ++i) {
    const int s = x.color(0, b.line_cosets[i].front());
    CHECK(x.transpose(s) == s);
    const Parabolic e = radical_of_color(x, t, rad, s);
    CHECK(e.num_classes() == 20);
    for (const auto& cls : e.classes()) CHECK(cls.size() == 5);
    for (int c : e.colors()) CHECK(compose_thin(t, c, s) == s);
    CHECK(e.classes()[0] == set_radical(*b.group, b.line_cosets[i]));
  }
  CHECK_THROWS_AS(Parabolic(x, {0, 1}), std::invalid_argument);
  CHECK(Parabolic::diagonal(x).num_classes() == 100);
}

TEST_CASE("meet identities of the schemes") {
  for (int p : {5, 7}) {
    auto single = [&](int i) { return paper_scheme(p, FusionLevel::single(i)); };
    auto pair = [&](int i, int j) { return paper_scheme(p, FusionLevel::pair(i, j)); };
    CHECK(meet_schemes(single(0), single(1)) == paper_scheme(p));
    CHECK(meet_schemes(single(1), single(2)) == paper_scheme(p));
    CHECK(meet_schemes(pair(0, 1), pair(0, 2)) == single(0));
    CHECK(meet_schemes(pair(0, 1), pair(1, 2)) == single(1));
    CHECK(meet_schemes(pair(0, 2), pair(1, 2)) == single(2));
  }
  const Scheme x = paper_scheme(5);
  CHECK(meet_schemes(x, x) == x);
  CHECK(is_fusion(paper_scheme(5, FusionLevel::zero()), x));
  CHECK_FALSE(is_fusion(x, paper_scheme(5, FusionLevel::zero())));
}

TEST_CASE("scheme constructor rejects wrong sizes") {
  CHECK_THROWS_AS(Scheme::from_colors(3, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(wl_stabilize(3, std::vector<int>{0, 1}), std::invalid_argument);
}
