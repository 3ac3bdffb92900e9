#include "ccs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "ccs/algebraic_iso.hpp"

namespace ccs {

namespace {

std::string str(const BigInt& x) { return x.str(); }
std::string str(long long x) { return std::to_string(x); }

BigInt power(int base, int e) {
  BigInt r = 1;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

bool contains_all(const PermGroup& big, const PermGroup& small) {
  for (const auto& g : small.generators())
    if (!big.contains(g)) return false;
  return true;
}

/// Point bijection m carries every color s onto phi(s) (exhaustive).
bool induces(const Scheme& x, const std::vector<int>& m, std::span<const int> phi) {
  const int n = x.degree();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (x.color(m[a], m[b]) != phi[x.color(a, b)]) return false;
  return true;
}

/// Shared, lazily built objects of one verification run.
class Context {
 public:
  explicit Context(const VerifyOptions& opt)
      : opt_(opt), bundle_(build_paper_group(opt.p, opt.group)), seed_(right_translations(*bundle_.group)) {}

  const VerifyOptions& options() const { return opt_; }
  int p() const { return opt_.p; }
  const PaperGroupBundle& bundle() const { return bundle_; }
  const PermGroup& seed() const { return seed_; }

  const BasicSetPartition& part(FusionLevel l) {
    auto it = parts_.find(l.name());
    if (it == parts_.end()) it = parts_.emplace(l.name(), fusion_partition(bundle_, l)).first;
    return it->second;
  }
  const Scheme& scheme(FusionLevel l) {
    auto it = schemes_.find(l.name());
    if (it == schemes_.end()) it = schemes_.emplace(l.name(), cayley_scheme(part(l))).first;
    return it->second;
  }
  const IntersectionTensor& tensor(FusionLevel l) {
    auto it = tensors_.find(l.name());
    if (it == tensors_.end()) it = tensors_.emplace(l.name(), intersection_tensor(scheme(l))).first;
    return it->second;
  }
  const PermGroup& aut(FusionLevel l) {
    auto it = auts_.find(l.name());
    if (it == auts_.end()) it = auts_.emplace(l.name(), automorphism_group(scheme(l), &seed_, opt_.budget)).first;
    return it->second;
  }

 private:
  const VerifyOptions& opt_;
  PaperGroupBundle bundle_;
  PermGroup seed_;
  std::map<std::string, BasicSetPartition> parts_;
  std::map<std::string, Scheme> schemes_;
  std::map<std::string, IntersectionTensor> tensors_;
  std::map<std::string, PermGroup> auts_;
};

const FusionLevel kFull = FusionLevel::full();

int expected_set_count(FusionLevel l, int p) {
  switch (l.kind) {
    case FusionLevel::Kind::full: return p * p + 3 * p;
    case FusionLevel::Kind::single: return p * p + 2 * p + 1;
    case FusionLevel::Kind::pair: return p * p + p + 2;
    case FusionLevel::Kind::zero: return p * p + 3;
  }
  return 0;
}

std::optional<BigInt> expected_aut_order(FusionLevel l, int p) {
  switch (l.kind) {
    case FusionLevel::Kind::full: return 4 * power(p, 2);
    case FusionLevel::Kind::single: return 4 * power(p, 4);
    case FusionLevel::Kind::zero: return 4 * power(p, 8);
    case FusionLevel::Kind::pair: return std::nullopt;
  }
  return std::nullopt;
}

// Scheme color of the basic set containing `element` in the Cayley scheme.
int color_of(const Scheme& x, int element) { return x.color(0, element); }

// ---- stages on the full scheme ----

void stage_sring(Context& c, StageResult& r) {
  const auto& s = c.part(kFull);
  r.report.merge(check_bundle(c.bundle()), "group.");
  r.report.merge(validate_schur(s));
  r.report.add("set_count_p^2+3p", s.size() == expected_set_count(kFull, c.p()), std::to_string(s.size()));
  r.facts.emplace_back("basic_sets", s.size());
}

void stage_propertyring(Context& c, StageResult& r) {
  r.report.merge(verify_A_properties(c.part(kFull), c.bundle()));
}

void stage_orderring(Context& c, StageResult& r) {
  const auto& s = c.part(kFull);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const auto m = meet_partitions(c.part(FusionLevel::single(i)), c.part(FusionLevel::single(j)));
      r.report.add("meet_S" + std::to_string(i + 1) + "_S" + std::to_string(j + 1) + "_is_S", m == s,
                   std::to_string(m.size()) + " sets");
    }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const auto a = FusionLevel::pair(std::min(i, j), std::max(i, j));
    const auto b = FusionLevel::pair(std::min(i, k), std::max(i, k));
    const auto m = meet_partitions(c.part(a), c.part(b));
    r.report.add("meet_S" + a.name() + "_S" + b.name() + "_is_S" + std::to_string(i + 1),
                 m == c.part(FusionLevel::single(i)), std::to_string(m.size()) + " sets");
  }
}

void stage_fusionring(Context& c, StageResult& r, const std::vector<FusionLevel>& levels) {
  for (const auto& l : levels) {
    const auto& part = c.part(l);
    const std::string tag = "S" + l.name() + ".";
    r.report.merge(validate_schur(part), tag);
    r.report.add(tag + "set_count", part.size() == expected_set_count(l, c.p()), std::to_string(part.size()));
    r.report.merge(recognize_products(part, c.bundle()), tag);
    switch (l.kind) {
      case FusionLevel::Kind::single: r.report.add(tag + "fusion_of_S", is_fusion(part, c.part(kFull))); break;
      case FusionLevel::Kind::pair:
        r.report.add(tag + "fusion_of_S_i_and_S_j", is_fusion(part, c.part(FusionLevel::single(l.i))) &&
                                                        is_fusion(part, c.part(FusionLevel::single(l.j))));
        break;
      case FusionLevel::Kind::zero:
        for (const auto& q : all_fusion_levels())
          if (q.kind == FusionLevel::Kind::pair) r.report.add(tag + "fusion_of_S" + q.name(), is_fusion(part, c.part(q)));
        break;
      case FusionLevel::Kind::full: break;
    }
  }
}

void stage_coherence(Context& c, StageResult& r, FusionLevel l) {
  const Scheme& x = c.scheme(l);
  const int p = c.p();
  r.report.add("degree_4p^2", x.degree() == 4 * p * p, std::to_string(x.degree()));
  r.report.add("association_scheme", x.is_association_scheme());
  r.report.add("rank_equals_set_count", x.rank() == c.part(l).size(), std::to_string(x.rank()));
  r.report.add("wl_stable", is_wl_stable(x.degree(), x.colors()));
  WlStats stats;
  const Scheme w = wl_stabilize(x.degree(), x.colors(), &stats);
  r.report.add("wl_fixpoint", w == x, "rank " + std::to_string(stats.initial_rank) + " -> " +
                                          std::to_string(stats.final_rank));
  std::map<int, int> valencies;
  for (int s = 0; s < x.rank(); ++s) ++valencies[x.valency(s)];
  std::string census;
  for (auto [v, k] : valencies) census += (census.empty() ? "" : ", ") + std::to_string(k) + "x" + std::to_string(v);
  if (l == kFull)
    r.report.add("valencies", valencies == std::map<int, int>{{1, p * p}, {p, 3 * p}}, census);
  const auto& t = c.tensor(l);
  r.report.merge(t.check_identities(), "tensor.");
  r.report.add("tensor.commutative", t.is_commutative());
  if (l == kFull) {
    const auto& b = c.bundle();
    const int x1 = color_of(x, b.line_cosets[0].front()), x2 = color_of(x, b.line_cosets[1].front());
    bool unit = true;
    std::set<int> seen;
    for (int g : b.blocks[2]) {
      const int u = color_of(x, g);
      if (seen.insert(u).second) unit = unit && t(x1, x2, u) == 1;
    }
    r.report.add("r(X1)r(X2)_unit_over_r(X3)_cosets", unit && static_cast<int>(seen.size()) == p);
  }
  if (l.kind == FusionLevel::Kind::zero) {
    const auto& b = c.bundle();
    const long long v = t(color_of(x, b.blocks[0].front()), color_of(x, b.blocks[1].front()),
                          color_of(x, b.blocks[2].front()));
    r.report.add("r(Y1)r(Y2)_over_r(Y3)_is_p^2", v == static_cast<long long>(p) * p, str(v));
  }
  if (l != kFull) r.report.add("fusion_of_X", is_fusion(x, c.scheme(kFull)));
  r.facts.emplace_back("degree", x.degree());
  r.facts.emplace_back("rank", x.rank());
  r.facts.emplace_back("tensor_entries", t.entries().size());
}

void stage_propertyscheme(Context& c, StageResult& r) {
  const auto b = verify_B_properties(c.scheme(kFull));
  r.report.merge(b.report);
  const Scheme& x = c.scheme(kFull);
  std::array<int, 3> expected{};
  for (int i = 0; i < 3; ++i) expected[i] = color_of(x, c.bundle().line_cosets[i].front());
  auto got = b.symmetric_colors;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  r.report.add("symmetric_colors_are_r(X_i)", got == expected);
}

void stage_orderscheme(Context& c, StageResult& r) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const auto m = meet_schemes(c.scheme(FusionLevel::single(i)), c.scheme(FusionLevel::single(j)));
      r.report.add("meet_X" + std::to_string(i + 1) + "_X" + std::to_string(j + 1) + "_is_X", m == c.scheme(kFull),
                   "rank " + std::to_string(m.rank()));
    }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const auto a = FusionLevel::pair(std::min(i, j), std::max(i, j));
    const auto b = FusionLevel::pair(std::min(i, k), std::max(i, k));
    const auto m = meet_schemes(c.scheme(a), c.scheme(b));
    r.report.add("meet_X" + a.name() + "_X" + b.name() + "_is_X" + std::to_string(i + 1),
                 m == c.scheme(FusionLevel::single(i)), "rank " + std::to_string(m.rank()));
  }
}

void stage_fusionscheme(Context& c, StageResult& r) {
  const int p = c.p();
  for (const auto& l : all_fusion_levels()) {
    const Scheme& x = c.scheme(l);
    const std::string tag = "X" + l.name() + ".";
    r.report.add(tag + "wl_stable", is_wl_stable(x.degree(), x.colors()));
    r.report.merge(recognize_products(c.part(l), c.bundle()), tag);
    switch (l.kind) {
      case FusionLevel::Kind::single: r.report.add(tag + "fusion_of_X", is_fusion(x, c.scheme(kFull))); break;
      case FusionLevel::Kind::pair:
        r.report.add(tag + "fusion_of_X_i_and_X_j", is_fusion(x, c.scheme(FusionLevel::single(l.i))) &&
                                                        is_fusion(x, c.scheme(FusionLevel::single(l.j))));
        break;
      case FusionLevel::Kind::zero:
        for (const auto& q : all_fusion_levels())
          if (q.kind == FusionLevel::Kind::pair) r.report.add(tag + "fusion_of_X" + q.name(), is_fusion(x, c.scheme(q)));
        break;
      case FusionLevel::Kind::full: break;
    }
  }
  // The products of regular schemes are separable; audit them where the
  // enumeration stays small.
  std::vector<FusionLevel> audited{FusionLevel::single(0)};
  if (p <= 7) audited.push_back(FusionLevel::zero());
  for (const auto& l : audited) {
    const auto audit = separability_audit(c.scheme(l), c.options().budget);
    r.report.add("X" + l.name() + ".separable", audit.ok() && audit.inconclusive_count == 0,
                 std::to_string(audit.induced_count) + "/" + std::to_string(audit.algebraic_automorphism_count) +
                     " induced");
  }
}

void stage_fixedpoint(Context& c, StageResult& r, const std::vector<FusionLevel>& levels) {
  std::mt19937_64 rng(0x5eedf00dULL);
  for (const auto& l : levels) {
    const Scheme& x = c.scheme(l);
    const std::string tag = "X" + l.name() + ".";
    const ThinRadical rad = thin_radical(x, c.tensor(l));
    const Parabolic& e = rad.closure;
    r.report.add(tag + "thin_parabolic", e.is_thin(x), std::to_string(e.num_classes()) + " classes");
    const PermGroup& aut = c.aut(l);
    long long tested = 0, hypothesis = 0, violations = 0;
    auto test = [&](const Permutation& f) {
      const auto fp = verify_fixed_point_lemma(x, e, f);
      ++tested;
      hypothesis += fp.hypothesis;
      violations += !fp.holds();
    };
    if (aut.order() <= 10'000) {
      for (const auto& f : aut.elements()) test(f);
    } else {
      for (int k = 0; k < 64; ++k) test(aut.random_element(rng));
    }
    r.report.add(tag + "fixed_point_lemma", violations == 0,
                 str(tested) + " automorphisms, " + str(hypothesis) + " satisfy the hypothesis");
    // Exhaustive form: the pointwise stabilizer of one point per class is trivial.
    std::vector<int> reps;
    for (const auto& cls : e.classes()) reps.push_back(cls.front());
    const PermGroup stab = aut.with_base(reps);
    BigInt rest = 1;
    for (int k = static_cast<int>(reps.size()); k < stab.num_levels(); ++k) rest *= stab.level_orbit(k).size();
    r.report.add(tag + "class_representative_stabilizer_trivial", rest == 1, "stabilizer order " + str(rest));
  }
  // Translations move every point.
  bool free = true;
  for (const auto& g : c.seed().generators()) free = free && (g.is_identity() || g.num_fixed_points() == 0);
  r.report.add("translations_fixed_point_free", free);
}

void stage_semiregular(Context& c, StageResult& r) {
  const PermGroup& aut = c.aut(kFull);
  const int n = aut.degree();
  int nontrivial = 0;
  for (int x = 0; x < n; ++x) {
    const PermGroup g = aut.with_base({x});
    BigInt stab = 1;
    for (int k = 1; k < g.num_levels(); ++k) stab *= g.level_orbit(k).size();
    if (stab != 1) ++nontrivial;
  }
  r.report.add("point_stabilizers_trivial", nontrivial == 0,
               std::to_string(n - nontrivial) + "/" + std::to_string(n) + " points");
  r.report.add("order_at_most_4p^2", aut.order() <= 4 * power(c.p(), 2), str(aut.order()));
}

void stage_regular(Context& c, StageResult& r) {
  const int p = c.p();
  const PermGroup& a = c.aut(kFull);
  r.report.merge(a.verify(), "chain.");
  r.report.add("Aut(X)_order_4p^2", a.order() == 4 * power(p, 2), str(a.order()));
  r.report.add("Aut(X)_regular", regularity_class(a) == Regularity::regular,
               std::string(regularity_name(regularity_class(a))));
  r.report.add("Aut(X)_contains_translations", contains_all(a, c.seed()));
  std::array<const PermGroup*, 3> single{}, pair{};
  for (int i = 0; i < 3; ++i) {
    single[i] = &c.aut(FusionLevel::single(i));
    r.report.add("Aut(X" + std::to_string(i + 1) + ")_order_4p^4", single[i]->order() == 4 * power(p, 4),
                 str(single[i]->order()));
  }
  const auto pairs = std::array{FusionLevel::pair(0, 1), FusionLevel::pair(0, 2), FusionLevel::pair(1, 2)};
  const PermGroup& a0 = c.aut(FusionLevel::zero());
  r.report.add("Aut(X0)_order_4p^8", a0.order() == 4 * power(p, 8), str(a0.order()));
  for (int q = 0; q < 3; ++q) {
    pair[q] = &c.aut(pairs[q]);
    r.report.add("Aut(X" + pairs[q].name() + ")_inside_Aut(X0)", contains_all(a0, *pair[q]), str(pair[q]->order()));
    r.report.add("Aut(X" + pairs[q].name() + ")_contains_Aut(X_i)_Aut(X_j)",
                 contains_all(*pair[q], *single[pairs[q].i]) && contains_all(*pair[q], *single[pairs[q].j]));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const PermGroup m = group_intersection(*single[i], *single[j]);
      r.report.add("Aut(X" + std::to_string(i + 1) + ")_meet_Aut(X" + std::to_string(j + 1) + ")_is_Aut(X)",
                   m.order() == a.order() && contains_all(m, a), str(m.order()));
    }
  for (int i = 0; i < 3; ++i) {
    std::vector<int> with_i;
    for (int q = 0; q < 3; ++q)
      if (pairs[q].i == i || pairs[q].j == i) with_i.push_back(q);
    const PermGroup m = group_intersection(*pair[with_i[0]], *pair[with_i[1]]);
    r.report.add("Aut(X" + pairs[with_i[0]].name() + ")_meet_Aut(X" + pairs[with_i[1]].name() + ")_is_Aut(X" +
                     std::to_string(i + 1) + ")",
                 m.order() == single[i]->order() && contains_all(m, *single[i]), str(m.order()));
  }
  const BigInt a1 = single[0]->order(), a2 = single[1]->order();
  const BigInt a12 = pair[0]->order(), a13 = pair[1]->order();
  const BigInt bound = 16 * power(p, 12);
  r.report.add("chain_A12_A13_at_most_A1_A0", a12 * a13 <= a1 * a0.order() && a1 * a0.order() == bound,
               str(a12 * a13) + " <= " + str(bound));
  r.report.add("min_A12_A13_at_most_4p^6", std::min(a12, a13) <= 4 * power(p, 6), str(std::min(a12, a13)));
  r.report.add("A_times_A12_at_least_A1_A2", a.order() * a12 >= a1 * a2);
  r.report.add("A1_A2_at_least_4p^2_A12", a1 * a2 >= 4 * power(p, 2) * a12);
  r.facts.emplace_back("aut_order", str(a.order()));
  r.facts.emplace_back("regularity", regularity_name(regularity_class(a)));
}

void stage_nonschurian(Context& c, StageResult& r) {
  const int p = c.p();
  const Scheme& x = c.scheme(kFull);
  const auto s = is_schurian(x, &c.seed(), c.options().budget);
  r.report.add("not_schurian", !s.schurian);
  r.report.add("witness_size_4p^3", s.witness_size == 4LL * p * p * p, str(s.witness_size));
  bool symmetric_witness = false;
  for (int i = 0; i < 3; ++i) symmetric_witness = symmetric_witness || s.witness_color == color_of(x, c.bundle().line_cosets[i].front());
  r.report.add("witness_is_r(X_i)", symmetric_witness, "color " + std::to_string(s.witness_color));
  r.report.add("orbit_rank_4p^2", s.orbit_rank == 4 * p * p, std::to_string(s.orbit_rank));
  r.report.add("orbit_rank_differs_from_rank", s.orbit_rank != x.rank(),
               std::to_string(s.orbit_rank) + " vs " + std::to_string(x.rank()));
  r.report.add("2-orbits_refine_X", is_fusion(x, two_orbit_partition(s.aut)));
  r.facts.emplace_back("schurian", s.schurian);
  r.facts.emplace_back("witness_size", s.witness_size);
  r.facts.emplace_back("orbit_rank", s.orbit_rank);
}

void stage_grouptype(Context& c, StageResult& r) {
  const auto g = recover_group_of_regular_scheme(c.scheme(kFull), &c.seed(), c.options().budget);
  r.report.merge(g.analysis);
  r.report.add("recovered_C2pxC2p", g.kind == CandidateKind::c2p_x_c2p, g.label);
  r.report.add("census_matches_G", g.census == order_census(*c.bundle().group));
  r.report.add("recovered_group_axioms", g.group->check_axioms().ok());
  r.facts.emplace_back("recovered_group", g.label);
  r.facts.emplace_back("involutions", g.involutions);
}

void stage_census(Context& c, StageResult& r) {
  const int p = c.p();
  Json table = Json::array();
  for (auto kind : kAllCandidateKinds) {
    const GroupTable g = build_candidate_group(kind, p);
    const std::string tag = std::string(candidate_name(kind)) + ".";
    r.report.add(tag + "order_4p^2", g.order() == 4 * p * p);
    if (p <= 7) r.report.merge(g.check_axioms(), tag + "axioms.");
    const auto census = order_census(g);
    const int k2 = census.count(2) ? census.at(2) : 0;
    r.report.add(tag + "k2", k2 == expected_involutions(kind, p), std::to_string(k2));
    const auto sylow = sylow_subgroups(g, p);
    bool elementary = sylow.count() == 1 && sylow.subgroup_order == p * p;
    if (elementary) {
      const auto& s = sylow.subgroups.front();
      for (int x : s) {
        elementary = elementary && (x == g.identity() || g.element_order(x) == p);
        for (int y : s) elementary = elementary && g.mul(x, y) == g.mul(y, x);
      }
    }
    r.report.add(tag + "unique_sylow_CpxCp", elementary, std::to_string(sylow.count()) + " Sylow subgroups");
    if (kind == CandidateKind::c2p_x_c2p) r.report.add(tag + "k2_at_most_3p", k2 <= 3 * p);
    if (kind == CandidateKind::c2p_x_d2p) r.report.add(tag + "k2_is_2p+1", k2 == 2 * p + 1);
    if (kind == CandidateKind::d2p_x_d2p || kind == CandidateKind::cp2_semidirect_c2_x_c2)
      r.report.add(tag + "k2_at_least_p^2", k2 >= p * p);
    Json row;
    row["group"] = candidate_name(kind);
    row["k2"] = k2;
    row["sylow_count"] = sylow.count();
    table.push_back(std::move(row));
  }
  r.facts.emplace_back("census", std::move(table));
}

void stage_cayleyiso(Context& c, StageResult& r) {
  const auto& b = c.bundle();
  const auto& s = c.part(kFull);
  const Scheme& x = c.scheme(kFull);
  const auto colors = set_colors(x, s);
  std::vector<int> set_of_color(x.rank(), -1);
  for (int k = 0; k < s.size(); ++k) set_of_color[colors[k]] = k;

  const auto phis = enumerate_algebraic_isos(c.tensor(kFull), c.tensor(kFull));
  int ok = 0, agree = 0;
  std::string first_problem;
  for (const auto& phi : phis) {
    std::vector<int> psi(s.size());
    for (int k = 0; k < s.size(); ++k) psi[k] = set_of_color[phi[colors[k]]];
    const auto res = cayley_iso_from_algebraic(psi, b, s, s);
    if (!res.ok) {
      if (first_problem.empty()) first_problem = res.diagnostic;
      continue;
    }
    ++ok;
    if (induces(x, res.map, phi)) ++agree;
  }
  const std::string n = std::to_string(phis.size());
  r.report.add("algebraic_automorphisms_from_cayley_isomorphisms", ok == static_cast<int>(phis.size()) && ok > 0,
               std::to_string(ok) + "/" + n + (first_problem.empty() ? "" : ", " + first_problem));
  r.report.add("constructed_map_induces_phi", agree == ok, std::to_string(agree) + "/" + std::to_string(ok));

  int round_trips = 0;
  const auto sample = sample_linear_automorphisms(c.p(), 20);
  for (const auto& [m2, mp] : sample) {
    const auto sigma = linear_automorphism(b, m2, mp);
    std::vector<std::vector<int>> image;
    for (const auto& set : s.sets()) {
      std::vector<int> t;
      for (int g : set) t.push_back(sigma[g]);
      image.push_back(std::move(t));
    }
    const BasicSetPartition dst(b.group, std::move(image));
    std::vector<int> psi(s.size());
    for (int k = 0; k < s.size(); ++k) {
      std::vector<int> t;
      for (int g : s.set(k)) t.push_back(sigma[g]);
      std::sort(t.begin(), t.end());
      psi[k] = dst.index_of(t);
    }
    const auto res = cayley_iso_from_algebraic(psi, b, s, dst);
    if (res.ok && res.map == sigma) ++round_trips;
  }
  r.report.add("linear_automorphism_round_trip", round_trips == static_cast<int>(sample.size()),
               std::to_string(round_trips) + "/" + std::to_string(sample.size()));
  r.facts.emplace_back("algebraic_automorphisms", phis.size());
}

void stage_separable(Context& c, StageResult& r, FusionLevel l) {
  const Scheme& x = c.scheme(l);
  const auto audit = separability_audit(x, c.options().budget);
  r.report.add("all_induced", audit.ok(),
               std::to_string(audit.induced_count) + "/" + std::to_string(audit.algebraic_automorphism_count));
  r.report.add("no_failures", audit.failure_count == 0, std::to_string(audit.failure_count));
  r.report.add("no_inconclusive", audit.inconclusive_count == 0, std::to_string(audit.inconclusive_count));
  int verified = 0;
  for (const auto& w : audit.witnesses)
    if (w.status == InduceStatus::found && induces(x, w.point_map, w.phi)) ++verified;
  r.report.add("witnesses_verified", verified == audit.induced_count, std::to_string(verified));
  if (audit.inconclusive_count > 0 && audit.failure_count == 0) r.inconclusive = true;
  r.facts.emplace_back("algebraic_automorphism_count", audit.algebraic_automorphism_count);
  r.facts.emplace_back("induced_count", audit.induced_count);
  r.facts.emplace_back("inconclusive_count", audit.inconclusive_count);
  r.facts.emplace_back("failure_count", audit.failure_count);
  r.artifact = audit_to_json(audit, l == kFull ? "scheme.json" : "scheme-" + l.name() + ".json");
}

// ---- stages on a fusion scheme ----

void stage_fusion_aut(Context& c, StageResult& r, FusionLevel l) {
  const PermGroup& a = c.aut(l);
  r.report.merge(a.verify(), "chain.");
  if (auto expected = expected_aut_order(l, c.p()))
    r.report.add("order", a.order() == *expected, str(a.order()) + " expected " + str(*expected));
  if (l.kind == FusionLevel::Kind::pair) {
    r.report.add("contains_Aut(X_i)_Aut(X_j)", contains_all(a, c.aut(FusionLevel::single(l.i))) &&
                                                   contains_all(a, c.aut(FusionLevel::single(l.j))));
    r.report.add("inside_Aut(X0)", contains_all(c.aut(FusionLevel::zero()), a));
  }
  r.report.add("contains_Aut(X)", contains_all(a, c.aut(kFull)));
  r.facts.emplace_back("aut_order", str(a.order()));
  r.facts.emplace_back("regularity", regularity_name(regularity_class(a)));
}

void stage_fusion_schurity(Context& c, StageResult& r, FusionLevel l) {
  const Scheme& x = c.scheme(l);
  const auto s = is_schurian(x, &c.seed(), c.options().budget);
  r.report.add("schurian", s.schurian,
               s.schurian ? "" : "witness color " + std::to_string(s.witness_color));
  r.report.add("orbit_rank_equals_rank", s.orbit_rank == x.rank(), std::to_string(s.orbit_rank));
  r.facts.emplace_back("schurian", s.schurian);
  r.facts.emplace_back("orbit_rank", s.orbit_rank);
}

const std::map<std::string, std::string>& titles() {
  static const std::map<std::string, std::string> t{
      {"sring", "Schur partition"},
      {"propertyring", "properties A1-A3"},
      {"orderring", "meet identities of the S-rings"},
      {"fusionring", "fusion S-rings and their products"},
      {"coherence", "Cayley scheme and WL fixpoint"},
      {"propertyscheme", "properties B1-B3"},
      {"orderscheme", "meet identities of the schemes"},
      {"fusionscheme", "fusion schemes"},
      {"fixedpoint", "fixed points of automorphisms"},
      {"semiregular", "semiregularity of Aut(X)"},
      {"regular", "automorphism orders and intersections"},
      {"nonschurian", "schurity of X"},
      {"grouptype", "group recovered from Aut(X)"},
      {"census", "candidate groups of order 4p^2"},
      {"cayleyiso", "Cayley isomorphisms from algebraic ones"},
      {"separable", "separability audit"},
      {"aut", "automorphism group"},
      {"schurity", "schurity"},
  };
  return t;
}

}  // namespace

bool VerifyResult::passed() const {
  return std::all_of(stages.begin(), stages.end(), [](const auto& s) { return s.passed(); });
}

bool VerifyResult::inconclusive() const {
  bool any = false;
  for (const auto& s : stages) {
    if (!s.inconclusive && (!s.error.empty() || !s.report.ok())) return false;
    any = any || s.inconclusive;
  }
  return any;
}

const std::vector<std::string>& stage_names() {
  static const std::vector<std::string> names{
      "sring",        "propertyring", "orderring",   "fusionring", "coherence",   "propertyscheme",
      "orderscheme",  "fusionscheme", "fixedpoint",  "semiregular", "regular",    "nonschurian",
      "grouptype",    "census",       "cayleyiso",   "separable"};
  return names;
}

const std::vector<std::string>& fusion_stage_names() {
  static const std::vector<std::string> names{"fusionring", "coherence", "aut", "schurity", "fixedpoint",
                                              "separable"};
  return names;
}

int expected_involutions(CandidateKind kind, int p) {
  switch (kind) {
    case CandidateKind::c2p_x_c2p: return 3;
    case CandidateKind::c2p_x_d2p: return 2 * p + 1;
    case CandidateKind::d2p_x_d2p: return p * p + 2 * p;
    case CandidateKind::cp2_semidirect_c2_x_c2: return 2 * p * p + 1;
  }
  return -1;
}

std::vector<std::pair<std::array<int, 4>, std::array<int, 4>>> sample_linear_automorphisms(int p, int count) {
  auto invertible = [](int m) {
    std::vector<std::array<int, 4>> out;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          for (int d = 0; d < m; ++d)
            if (((a * d - b * c) % m + m) % m != 0) out.push_back({a, b, c, d});
    return out;
  };
  const auto gl2 = invertible(2);
  const auto glp = invertible(p);
  std::vector<std::pair<std::array<int, 4>, std::array<int, 4>>> out;
  for (int k = 0; k < count; ++k)
    out.emplace_back(gl2[k % gl2.size()], glp[(static_cast<std::size_t>(k) * 7919) % glp.size()]);
  return out;
}

VerifyResult run_verification(const VerifyOptions& options, const std::function<void(const StageResult&)>& on_stage) {
  check_prime_parameter(options.p, options.group.max_p, options.group.override_max_p);
  const auto& names = options.fusion ? fusion_stage_names() : stage_names();
  if (!options.lemma.empty() && std::find(names.begin(), names.end(), options.lemma) == names.end())
    throw std::invalid_argument("unknown lemma '" + options.lemma + "'");
  if (options.budget <= 0) throw std::invalid_argument("budget must be positive");

  Context ctx(options);
  VerifyResult result;
  for (const auto& name : names) {
    if (!options.lemma.empty() && name != options.lemma) continue;
    StageResult stage;
    stage.name = name;
    stage.title = titles().at(name);
    const auto start = std::chrono::steady_clock::now();
    try {
      if (options.fusion) {
        const FusionLevel l = *options.fusion;
        if (name == "fusionring") stage_fusionring(ctx, stage, {l});
        else if (name == "coherence") stage_coherence(ctx, stage, l);
        else if (name == "aut") stage_fusion_aut(ctx, stage, l);
        else if (name == "schurity") stage_fusion_schurity(ctx, stage, l);
        else if (name == "fixedpoint") stage_fixedpoint(ctx, stage, {l});
        else if (name == "separable") stage_separable(ctx, stage, l);
      } else {
        if (name == "sring") stage_sring(ctx, stage);
        else if (name == "propertyring") stage_propertyring(ctx, stage);
        else if (name == "orderring") stage_orderring(ctx, stage);
        else if (name == "fusionring") stage_fusionring(ctx, stage, all_fusion_levels());
        else if (name == "coherence") stage_coherence(ctx, stage, kFull);
        else if (name == "propertyscheme") stage_propertyscheme(ctx, stage);
        else if (name == "orderscheme") stage_orderscheme(ctx, stage);
        else if (name == "fusionscheme") stage_fusionscheme(ctx, stage);
        else if (name == "fixedpoint") {
          std::vector<FusionLevel> levels{kFull};
          for (const auto& l : all_fusion_levels()) levels.push_back(l);
          stage_fixedpoint(ctx, stage, levels);
        } else if (name == "semiregular") stage_semiregular(ctx, stage);
        else if (name == "regular") stage_regular(ctx, stage);
        else if (name == "nonschurian") stage_nonschurian(ctx, stage);
        else if (name == "grouptype") stage_grouptype(ctx, stage);
        else if (name == "census") stage_census(ctx, stage);
        else if (name == "cayleyiso") stage_cayleyiso(ctx, stage);
        else if (name == "separable") stage_separable(ctx, stage, kFull);
      }
    } catch (const SearchBudgetExceeded& e) {
      stage.inconclusive = true;
      stage.facts.emplace_back("budget_exhausted", e.what());
    } catch (const std::exception& e) {
      stage.error = e.what();
    }
    stage.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_stage) on_stage(stage);
    result.stages.push_back(std::move(stage));
  }
  return result;
}

Json verification_to_json(const VerifyResult& result, const VerifyOptions& options, bool include_timings) {
  Json j;
  j["tool"] = "ccs";
  j["version"] = CCS_VERSION;
  Json config;
  config["p"] = options.p;
  config["fusion"] = options.fusion ? Json(options.fusion->name()) : Json(nullptr);
  config["lemma"] = options.lemma.empty() ? Json(nullptr) : Json(options.lemma);
  config["budget"] = options.budget;
  config["lines"] = options.group.lines;
  config["involutions"] = options.group.involutions;
  j["config"] = std::move(config);
  j["status"] = result.passed() ? "pass" : result.inconclusive() ? "inconclusive" : "fail";
  Json stages = Json::array();
  Json summary = Json::object();
  for (const auto& s : result.stages) {
    Json item;
    item["name"] = s.name;
    item["title"] = s.title;
    item["status"] = s.passed() ? "pass" : s.inconclusive ? "inconclusive" : "fail";
    if (!s.error.empty()) item["error"] = s.error;
    if (include_timings) item["seconds"] = s.seconds;
    Json facts = Json::object();
    for (const auto& [k, v] : s.facts) {
      facts[k] = v;
      summary[s.name + "." + k] = v;
    }
    item["facts"] = std::move(facts);
    item["checks"] = report_to_json(s.report);
    stages.push_back(std::move(item));
  }
  j["summary"] = std::move(summary);
  j["stages"] = std::move(stages);
  return j;
}

}  // namespace ccs
