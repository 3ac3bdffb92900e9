#include "ccs/algebraic_iso.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "refinement.hpp"

namespace ccs {

bool preserves_tensor(std::span<const int> phi, const IntersectionTensor& src, const IntersectionTensor& dst) {
  const int r = src.rank();
  if (dst.rank() != r || static_cast<int>(phi.size()) != r) return false;
  std::vector<char> hit(r, 0);
  for (int t : phi) {
    if (t < 0 || t >= r || hit[t]) return false;
    hit[t] = 1;
  }
  for (int s = 0; s < r; ++s) {
    if (src.valency(s) != dst.valency(phi[s])) return false;
    if (phi[src.transpose(s)] != dst.transpose(phi[s])) return false;
  }
  if (src.entries().size() != dst.entries().size()) return false;
  for (const auto& e : src.entries())
    if (dst(phi[e.s], phi[e.t], phi[e.u]) != e.c) return false;
  return true;
}

namespace {

using Bits = boost::dynamic_bitset<>;
using Row = std::vector<std::pair<int, long long>>;

// The tensor indexed by each pair of positions: (s,t) -> u, (s,u) -> t, (t,u) -> s.
struct Indexed {
  int r = 0;
  std::array<std::vector<Row>, 3> by;

  explicit Indexed(const IntersectionTensor& t) : r(t.rank()) {
    for (auto& v : by) v.assign(static_cast<std::size_t>(r) * r, {});
    for (const auto& e : t.entries()) {
      by[0][key(e.s, e.t)].push_back({e.u, e.c});
      by[1][key(e.s, e.u)].push_back({e.t, e.c});
      by[2][key(e.t, e.u)].push_back({e.s, e.c});
    }
    for (auto& v : by)
      for (auto& row : v) std::sort(row.begin(), row.end());
  }
  std::size_t key(int a, int b) const { return static_cast<std::size_t>(a) * r + b; }
  const Row& row(int kind, int a, int b) const { return by[kind][key(a, b)]; }
};

long long lookup(const Row& row, int x) {
  auto it = std::lower_bound(row.begin(), row.end(), std::pair<int, long long>{x, 0});
  return it != row.end() && it->first == x ? it->second : 0;
}

// Invariants of one color that any algebraic isomorphism must preserve.
std::vector<long long> profile(const IntersectionTensor& t, const Indexed& idx, int s) {
  std::vector<long long> out{t.valency(s), t.is_diagonal(s), t.transpose(s) == s};
  for (int kind = 0; kind < 3; ++kind) {
    std::vector<std::array<long long, 3>> items;
    for (int a = 0; a < t.rank(); ++a)
      for (const auto& [b, c] : kind == 2 ? idx.row(2, a, s) : idx.row(kind, s, a))
        items.push_back({c, t.valency(a), t.valency(b)});
    std::sort(items.begin(), items.end());
    out.push_back(-1);
    for (const auto& it : items) out.insert(out.end(), it.begin(), it.end());
  }
  return out;
}

class AlgebraicSearch {
 public:
  AlgebraicSearch(const IntersectionTensor& src, const IntersectionTensor& dst)
      : src_(src), dst_(dst), si_(src), di_(dst), r_(src.rank()) {}

  std::vector<ColorBijection> run(long long& nodes) {
    std::vector<Bits> domains(r_, Bits(r_));
    std::vector<std::vector<long long>> dp(r_);
    for (int t = 0; t < r_; ++t) dp[t] = profile(dst_, di_, t);
    for (int s = 0; s < r_; ++s) {
      const auto sp = profile(src_, si_, s);
      for (int t = 0; t < r_; ++t)
        if (sp == dp[t]) domains[s].set(t);
    }
    phi_.assign(r_, -1);
    inv_.assign(r_, -1);
    dfs(domains, 0);
    nodes = nodes_;
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void dfs(std::vector<Bits>& domains, int assigned) {
    ++nodes_;
    if (assigned == r_) {
      if (preserves_tensor(phi_, src_, dst_)) found_.push_back(phi_);
      return;
    }
    int var = -1;
    std::size_t best = 0;
    for (int s = 0; s < r_; ++s) {
      if (phi_[s] >= 0) continue;
      const std::size_t k = domains[s].count();
      if (k == 0) return;
      if (var < 0 || k < best) {
        var = s;
        best = k;
      }
    }
    for (auto t = domains[var].find_first(); t != Bits::npos; t = domains[var].find_next(t)) {
      std::vector<Bits> next = domains;
      if (assign(next, var, static_cast<int>(t))) dfs(next, assigned + 1);
      phi_[var] = -1;
      inv_[t] = -1;
    }
  }

  // Restricts `d` to values w whose entry in `row` equals c.
  static void restrict_to(Bits& d, const Row& row, long long c) {
    Bits mask(d.size());
    for (const auto& [w, v] : row)
      if (v == c) mask.set(w);
    d &= mask;
  }

  bool assign(std::vector<Bits>& d, int s, int t) {
    phi_[s] = t;
    inv_[t] = s;
    for (int v = 0; v < r_; ++v)
      if (phi_[v] < 0) d[v].reset(t);
    const int st = src_.transpose(s);
    if (phi_[st] >= 0) {
      if (phi_[st] != dst_.transpose(t)) return false;
    } else {
      const bool allowed = d[st].test(dst_.transpose(t));
      d[st].reset();
      if (allowed) d[st].set(dst_.transpose(t));
    }
    for (int a = 0; a < r_; ++a) {
      if (phi_[a] < 0) continue;
      for (int kind = 0; kind < 3; ++kind) {
        if (!check_pair(d, kind, a, s)) return false;
        if (a != s && !check_pair(d, kind, s, a)) return false;
      }
    }
    return true;
  }

  // Both positions of the pair are assigned; the third position is narrowed
  // or checked.
  bool check_pair(std::vector<Bits>& d, int kind, int a, int b) {
    const Row& srow = si_.row(kind, a, b);
    const Row& drow = di_.row(kind, phi_[a], phi_[b]);
    if (srow.size() != drow.size()) return false;
    for (const auto& [x, c] : srow) {
      if (phi_[x] >= 0) {
        if (lookup(drow, phi_[x]) != c) return false;
      } else {
        restrict_to(d[x], drow, c);
        if (d[x].none()) return false;
      }
    }
    for (const auto& [w, c] : drow)
      if (inv_[w] >= 0 && lookup(srow, inv_[w]) != c) return false;
    return true;
  }

  const IntersectionTensor& src_;
  const IntersectionTensor& dst_;
  Indexed si_, di_;
  int r_;
  std::vector<int> phi_, inv_;
  std::vector<ColorBijection> found_;
  long long nodes_ = 0;
};

InduceResult induce(std::span<const int> phi, const Scheme& x, const Scheme& y, long long budget) {
  std::vector<int> inv(phi.size());
  for (std::size_t s = 0; s < phi.size(); ++s) inv[phi[s]] = static_cast<int>(s);
  std::vector<int> target(y.colors().size());
  for (std::size_t i = 0; i < target.size(); ++i) target[i] = inv[y.colors()[i]];
  detail::PairRefiner refiner(x.degree(), x.colors(), target, budget);
  InduceResult r;
  try {
    auto root = refiner.root();
    r.map = refiner.search(root);
    r.status = r.map ? InduceStatus::found : InduceStatus::not_found;
  } catch (const SearchBudgetExceeded&) {
    r.status = InduceStatus::inconclusive;
  }
  r.nodes = refiner.nodes();
  return r;
}

}  // namespace

std::vector<ColorBijection> enumerate_algebraic_isos(const IntersectionTensor& src, const IntersectionTensor& dst,
                                                     AlgebraicSearchStats* stats) {
  if (src.rank() != dst.rank() || src.entries().size() != dst.entries().size()) return {};
  auto va = src.valencies(), vb = dst.valencies();
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  if (va != vb) return {};
  long long nodes = 0;
  auto out = AlgebraicSearch(src, dst).run(nodes);
  if (stats) stats->nodes = nodes;
  return out;
}

std::string_view induce_status_name(InduceStatus s) {
  switch (s) {
    case InduceStatus::found: return "found";
    case InduceStatus::not_found: return "not_found";
    case InduceStatus::inconclusive: return "inconclusive";
  }
  return "not_found";
}

InduceResult find_inducing_isomorphism(std::span<const int> phi, const Scheme& x, const Scheme& y, long long budget) {
  if (x.degree() != y.degree()) throw std::invalid_argument("schemes have different degrees");
  if (!preserves_tensor(phi, intersection_tensor(x), intersection_tensor(y)))
    throw std::invalid_argument("phi is not an algebraic isomorphism");
  return induce(phi, x, y, budget);
}

SeparabilityAudit separability_audit(const Scheme& scheme, long long budget) {
  SeparabilityAudit audit;
  const int n = scheme.degree();
  const auto tensor = intersection_tensor(scheme);
  const auto phis = enumerate_algebraic_isos(tensor, tensor);
  audit.algebraic_automorphism_count = static_cast<int>(phis.size());

  // Induced color maps form a group; keep it closed so that only maps outside
  // it need a search. Composition: first a, then b.
  std::vector<std::pair<ColorBijection, Permutation>> gens;
  std::map<ColorBijection, Permutation> induced;
  auto reclose = [&] {
    ColorBijection id(tensor.rank());
    std::iota(id.begin(), id.end(), 0);
    induced.clear();
    induced.emplace(id, Permutation::identity(n));
    std::vector<ColorBijection> queue{id};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const ColorBijection a = queue[h];
      const Permutation ma = induced.at(a);
      for (const auto& [b, mb] : gens) {
        ColorBijection c(a.size());
        for (std::size_t s = 0; s < a.size(); ++s) c[s] = b[a[s]];
        if (induced.emplace(c, ma * mb).second) queue.push_back(std::move(c));
      }
    }
  };
  reclose();

  for (const auto& phi : phis) {
    AuditWitness w{phi, {}, InduceStatus::not_found};
    if (auto it = induced.find(phi); it != induced.end()) {
      w.status = InduceStatus::found;
      w.point_map = it->second.images();
    } else {
      auto r = induce(phi, scheme, scheme, budget);
      ++audit.searches;
      w.status = r.status;
      if (r.status == InduceStatus::found) {
        w.point_map = r.map->images();
        gens.emplace_back(phi, *r.map);
        reclose();
      }
    }
    switch (w.status) {
      case InduceStatus::found: ++audit.induced_count; break;
      case InduceStatus::inconclusive: ++audit.inconclusive_count; break;
      case InduceStatus::not_found: ++audit.failure_count; break;
    }
    audit.witnesses.push_back(std::move(w));
  }
  return audit;
}

RecoveredGroup recover_group_of_regular_scheme(const Scheme& scheme, const PermGroup* seed, long long budget) {
  const int n = scheme.degree();
  const PermGroup aut = automorphism_group(scheme, seed, budget);
  if (regularity_class(aut) != Regularity::regular) throw std::invalid_argument("automorphism group is not regular");

  std::vector<Permutation> t(n);
  for (auto& g : aut.elements()) {
    const int y = g[0];
    t[y] = std::move(g);
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[static_cast<std::size_t>(x) * n + y] = t[y][x];

  RecoveredGroup out;
  out.group = std::make_shared<const GroupTable>(n, std::move(table), "recovered");
  const GroupTable& h = *out.group;
  out.census = order_census(h);
  out.involutions = out.census.count(2) ? out.census.at(2) : 0;
  out.label = "unclassified";

  int p = 0;
  while ((p + 1) * (p + 1) * 4 <= n) ++p;
  const bool shape = 4 * p * p == n && is_prime(p) && p >= 5;
  if (shape) {
    for (auto kind : kAllCandidateKinds)
      if (order_census(build_candidate_group(kind, p)) == out.census) {
        out.kind = kind;
        out.label = std::string(candidate_name(kind));
      }
  }

  Report& rep = out.analysis;
  rep.add("aut_regular", true, "order " + std::to_string(n));
  if (!shape) return out;

  // Basic set X(s) = {x : (1_H, x) in s}; an involution h has (1, h) and
  // (h, 1) = (1, h)^{t_h} in one color, so it lies in a symmetric set.
  std::vector<int> symmetric;
  for (int s = 0; s < scheme.rank(); ++s)
    if (!scheme.is_diagonal(s) && scheme.transpose(s) == s) symmetric.push_back(s);
  int inv_in_symmetric = 0;
  bool sizes_p = symmetric.size() == 3;
  std::vector<std::vector<int>> sets;
  for (int s : symmetric) {
    std::vector<int> xs;
    for (int x = 0; x < n; ++x)
      if (scheme.color(0, x) == s) xs.push_back(x);
    sizes_p = sizes_p && static_cast<int>(xs.size()) == p;
    for (int x : xs) inv_in_symmetric += h.element_order(x) == 2;
    sets.push_back(std::move(xs));
  }
  rep.add("three_symmetric_sets_of_size_p", sizes_p, std::to_string(symmetric.size()) + " symmetric colors");
  rep.add("involutions_in_symmetric_sets", inv_in_symmetric == out.involutions,
          std::to_string(inv_in_symmetric) + " of " + std::to_string(out.involutions));
  rep.add("involution_bound_3p", out.involutions <= 3 * p,
          "k2 = " + std::to_string(out.involutions) + ", 3p = " + std::to_string(3 * p));
  rep.add("k2_below_p^2", out.involutions < p * p);

  if (sizes_p) {
    std::vector<std::vector<int>> us;
    int dihedral = 0;
    bool orders = true;
    std::string types;
    for (const auto& xs : sets) {
      auto u = generated_elements(h, xs);
      orders = orders && static_cast<int>(u.size()) == 2 * p;
      bool abelian = true;
      for (int a : u)
        for (int b : u) abelian = abelian && h.mul(a, b) == h.mul(b, a);
      dihedral += !abelian;
      types += (types.empty() ? "" : ",") + std::string(abelian ? "C2p" : "D2p");
      us.push_back(std::move(u));
    }
    bool trivial = true;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) trivial = trivial && intersect_sorted(us[i], us[j]).size() == 1;
    rep.add("U_i_order_2p", orders, types);
    rep.add("U_pairwise_trivial", trivial);
    rep.add("U_all_cyclic", dihedral == 0, std::to_string(dihedral) + " dihedral");
  }

  const auto sylow = sylow_subgroups(h, p);
  bool elementary = sylow.count() == 1;
  if (elementary)
    for (int x : sylow.subgroups.front()) elementary = elementary && (x == h.identity() || h.element_order(x) == p);
  rep.add("unique_sylow_CpxCp", elementary, std::to_string(sylow.count()) + " Sylow subgroups");
  rep.add("classified_C2pxC2p", out.kind == CandidateKind::c2p_x_c2p, out.label);
  return out;
}

}  // namespace ccs
