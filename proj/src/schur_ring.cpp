#include "ccs/schur_ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace ccs {

namespace {

bool set_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.front() < b.front();
}

std::vector<int> product_set(const GroupTable& g, std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  out.reserve(a.size() * b.size());
  for (int x : a)
    for (int y : b) out.push_back(g.mul(x, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> right_coset(const GroupTable& g, std::span<const int> h, int x) {
  std::vector<int> out;
  for (int y : h) out.push_back(g.mul(y, x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BasicSetPartition::BasicSetPartition(GroupPtr group, std::vector<std::vector<int>> sets)
    : group_(std::move(group)), sets_(std::move(sets)) {
  const int n = group_->order();
  set_of_.assign(n, -1);
  for (auto& s : sets_) {
    if (s.empty()) throw std::invalid_argument("basic sets must be nonempty");
    std::sort(s.begin(), s.end());
  }
  std::sort(sets_.begin(), sets_.end(), set_less);
  for (int k = 0; k < size(); ++k)
    for (int x : sets_[k]) {
      if (x < 0 || x >= n) throw std::invalid_argument("basic set element out of range");
      if (set_of_[x] >= 0) throw std::invalid_argument("basic sets overlap");
      set_of_[x] = k;
    }
  if (std::find(set_of_.begin(), set_of_.end(), -1) != set_of_.end())
    throw std::invalid_argument("basic sets do not cover the group");
}

BasicSetPartition BasicSetPartition::singletons(GroupPtr group) {
  std::vector<std::vector<int>> sets;
  for (int g = 0; g < group->order(); ++g) sets.push_back({g});
  return BasicSetPartition(std::move(group), std::move(sets));
}

BasicSetPartition BasicSetPartition::trivial(GroupPtr group) {
  std::vector<int> rest;
  for (int g = 0; g < group->order(); ++g)
    if (g != group->identity()) rest.push_back(g);
  std::vector<std::vector<int>> sets{{group->identity()}};
  if (!rest.empty()) sets.push_back(std::move(rest));
  return BasicSetPartition(std::move(group), std::move(sets));
}

int BasicSetPartition::index_of(std::span<const int> elements) const {
  if (elements.empty()) return -1;
  const int k = set_of_[elements.front()];
  const auto& s = sets_[k];
  return std::equal(s.begin(), s.end(), elements.begin(), elements.end()) ? k : -1;
}

bool BasicSetPartition::is_union_of_sets(std::span<const int> elements) const {
  std::vector<char> in(set_of_.size(), 0);
  for (int x : elements) in[x] = 1;
  for (const auto& s : sets_) {
    const bool first = in[s.front()];
    for (int x : s)
      if (in[x] != first) return false;
  }
  return true;
}

StructureConstants::StructureConstants(int num_sets, std::vector<Entry> entries)
    : num_sets_(num_sets), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z); });
  const auto k = static_cast<std::size_t>(num_sets_);
  offsets_.assign(k * k + 1, 0);
  for (const auto& e : entries_) ++offsets_[static_cast<std::size_t>(e.x) * k + e.y + 1];
  for (std::size_t i = 0; i < k * k; ++i) offsets_[i + 1] += offsets_[i];
}

std::span<const StructureConstants::Entry> StructureConstants::products(int x, int y) const {
  const auto k = static_cast<std::size_t>(x) * num_sets_ + y;
  return std::span<const Entry>(entries_).subspan(offsets_[k], offsets_[k + 1] - offsets_[k]);
}

long long StructureConstants::operator()(int x, int y, int z) const {
  auto row = products(x, y);
  auto it = std::lower_bound(row.begin(), row.end(), z, [](const Entry& e, int v) { return e.z < v; });
  return it != row.end() && it->z == z ? it->c : 0;
}

Report validate_schur(const BasicSetPartition& part, std::optional<StructureConstants>* constants) {
  Report rep;
  const GroupTable& g = part.group();
  const int k = part.size();

  const auto& first = part.set(part.set_of(g.identity()));
  rep.add("identity_singleton", first.size() == 1);

  bool inverse_closed = true;
  for (const auto& s : part.sets()) {
    std::vector<int> inv;
    for (int x : s) inv.push_back(g.inv(x));
    std::sort(inv.begin(), inv.end());
    inverse_closed = inverse_closed && part.index_of(inv) >= 0;
  }
  rep.add("inverse_closed", inverse_closed);

  bool closed = true;
  std::string witness;
  std::vector<StructureConstants::Entry> entries;
  std::vector<long long> count(g.order(), 0);
  std::vector<int> touched;
  for (int x = 0; x < k && closed; ++x)
    for (int y = 0; y < k && closed; ++y) {
      for (int a : part.set(x))
        for (int b : part.set(y)) ++count[g.mul(a, b)];
      touched.clear();
      for (int a : part.set(x))
        for (int b : part.set(y)) touched.push_back(part.set_of(g.mul(a, b)));
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (int z : touched) {
        const auto& zs = part.set(z);
        const long long c = count[zs.front()];
        for (int e : zs)
          if (count[e] != c) {
            closed = false;
            witness = "sets " + std::to_string(x) + "," + std::to_string(y) + " over " + std::to_string(z);
            break;
          }
        if (c > 0) entries.push_back({x, y, z, c});
      }
      for (int a : part.set(x))
        for (int b : part.set(y)) count[g.mul(a, b)] = 0;
    }
  rep.add("product_closed", closed, witness);
  if (!closed) {
    rep.add("commutative", false, "no constants");
    return rep;
  }
  StructureConstants sc(k, std::move(entries));
  bool sums = true, commutative = true;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      long long total = 0;
      for (const auto& e : sc.products(x, y)) {
        total += e.c * static_cast<long long>(part.set(e.z).size());
        commutative = commutative && sc(y, x, e.z) == e.c;
      }
      sums = sums && total == static_cast<long long>(part.set(x).size() * part.set(y).size());
    }
  rep.add("size_sums", sums);
  rep.add("commutative", commutative);
  if (constants) *constants = std::move(sc);
  return rep;
}

StructureConstants structure_constants(const BasicSetPartition& part) {
  std::optional<StructureConstants> sc;
  const auto rep = validate_schur(part, &sc);
  if (!sc) throw std::invalid_argument("partition is not product-closed: " + rep.first_failure());
  return std::move(*sc);
}

BasicSetPartition paper_partition(const PaperGroupBundle& b) {
  return fusion_partition(b, FusionLevel::full());
}

FusionLevel FusionLevel::pair(int i, int j) {
  if (i > j) std::swap(i, j);
  return {Kind::pair, i, j};
}

std::string FusionLevel::name() const {
  switch (kind) {
    case Kind::full: return "";
    case Kind::single: return std::to_string(i + 1);
    case Kind::pair: return std::to_string(i + 1) + std::to_string(j + 1);
    case Kind::zero: return "0";
  }
  return "";
}

FusionLevel parse_fusion_level(std::string_view name) {
  for (const auto& level : all_fusion_levels())
    if (level.name() == name) return level;
  throw std::invalid_argument("unknown fusion level '" + std::string(name) + "'; expected 1,2,3,12,13,23 or 0");
}

std::vector<FusionLevel> all_fusion_levels() {
  return {FusionLevel::single(0), FusionLevel::single(1), FusionLevel::single(2), FusionLevel::pair(0, 1),
          FusionLevel::pair(0, 2),  FusionLevel::pair(1, 2),  FusionLevel::zero()};
}

BasicSetPartition fusion_partition(const PaperGroupBundle& b, FusionLevel level) {
  const GroupTable& g = *b.group;
  // Y_i is kept whole when merged, otherwise split into the cosets X_i g.
  std::array<bool, 3> merged{};
  switch (level.kind) {
    case FusionLevel::Kind::full: break;
    case FusionLevel::Kind::single:
      if (level.i < 0 || level.i > 2) throw std::invalid_argument("fusion index out of range");
      merged[level.i] = true;
      break;
    case FusionLevel::Kind::pair:
      if (level.i < 0 || level.j > 2 || level.i >= level.j) throw std::invalid_argument("fusion pair out of range");
      merged[level.i] = merged[level.j] = true;
      break;
    case FusionLevel::Kind::zero: merged = {true, true, true}; break;
  }
  std::vector<std::vector<int>> sets;
  for (int x : b.p_part) sets.push_back({x});
  for (int i = 0; i < 3; ++i) {
    if (merged[i]) {
      sets.push_back(b.blocks[i]);
      continue;
    }
    std::set<std::vector<int>> cosets;
    for (int x : b.p_part) cosets.insert(right_coset(g, b.line_cosets[i], x));
    sets.insert(sets.end(), cosets.begin(), cosets.end());
  }
  return BasicSetPartition(b.group, std::move(sets));
}

BasicSetPartition meet_partitions(const BasicSetPartition& x, const BasicSetPartition& y) {
  if (x.group().order() != y.group().order() ||
      !std::equal(x.group().table().begin(), x.group().table().end(), y.group().table().begin()))
    throw std::invalid_argument("partitions are over different groups");
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (int g = 0; g < x.group().order(); ++g) cells[{x.set_of(g), y.set_of(g)}].push_back(g);
  std::vector<std::vector<int>> sets;
  for (auto& [_, s] : cells) sets.push_back(std::move(s));
  return BasicSetPartition(x.group_ptr(), std::move(sets));
}

bool is_fusion(const BasicSetPartition& coarse, const BasicSetPartition& fine) {
  if (coarse.group().order() != fine.group().order()) return false;
  for (const auto& s : coarse.sets())
    if (!fine.is_union_of_sets(s)) return false;
  return true;
}

WreathShape wreath_shape(const BasicSetPartition& part, std::span<const int> U, std::span<const int> L) {
  WreathShape w;
  const GroupTable& g = part.group();
  if (!part.is_union_of_sets(U) || !part.is_union_of_sets(L)) return w;
  std::vector<char> in_l(g.order(), 0);
  for (int x : L) in_l[x] = 1;
  bool cosets_ok = true;
  w.base_is_group_ring = true;
  w.top_is_group_ring = true;
  w.top_rank = 1;
  std::set<int> seen;
  for (int u : U) {
    const int k = part.set_of(u);
    if (!seen.insert(k).second) continue;
    const auto& s = part.set(k);
    if (in_l[s.front()]) {
      ++w.base_rank;
      w.base_is_group_ring = w.base_is_group_ring && s.size() == 1;
      continue;
    }
    ++w.top_rank;
    // A union of L-cosets: closed under left multiplication by L.
    std::vector<int> orbit;
    for (int x : s)
      for (int l : L) orbit.push_back(g.mul(l, x));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    cosets_ok = cosets_ok && orbit == s;
    w.top_is_group_ring = w.top_is_group_ring && s.size() == L.size();
  }
  w.ok = cosets_ok;
  return w;
}

bool is_tensor_product(const BasicSetPartition& part, std::span<const int> U, std::span<const int> V) {
  const GroupTable& g = part.group();
  if (static_cast<long long>(U.size()) * static_cast<long long>(V.size()) != g.order()) return false;
  if (intersect_sorted(U, V).size() != 1) return false;
  for (int u : U)
    for (int v : V)
      if (g.mul(u, v) != g.mul(v, u)) return false;
  if (!part.is_union_of_sets(U) || !part.is_union_of_sets(V)) return false;
  std::vector<int> res_u, res_v;
  for (int k = 0; k < part.size(); ++k) {
    if (std::binary_search(U.begin(), U.end(), part.set(k).front())) res_u.push_back(k);
    if (std::binary_search(V.begin(), V.end(), part.set(k).front())) res_v.push_back(k);
  }
  if (res_u.size() * res_v.size() != static_cast<std::size_t>(part.size())) return false;
  for (int a : res_u)
    for (int b : res_v)
      if (part.index_of(product_set(g, part.set(a), part.set(b))) < 0) return false;
  return true;
}

Report recognize_products(const BasicSetPartition& part, const PaperGroupBundle& b) {
  Report rep;
  const GroupTable& g = *b.group;
  std::optional<FusionLevel> level;
  for (const auto& l : all_fusion_levels())
    if (fusion_partition(b, l) == part) level = l;
  rep.add("identified_level", level.has_value(), level ? level->name() : "not a fusion of the family");
  if (!level) return rep;
  const int p = b.p;

  if (level->kind == FusionLevel::Kind::single) {
    const int i = level->i, j = (i + 1) % 3, k = (i + 2) % 3;
    const auto uj = generated_elements(g, b.line_cosets[j]);
    const auto uk = generated_elements(g, b.line_cosets[k]);
    rep.add("U_j_order_2p", static_cast<int>(uj.size()) == 2 * p, std::to_string(uj.size()));
    rep.add("U_k_order_2p", static_cast<int>(uk.size()) == 2 * p, std::to_string(uk.size()));
    rep.add("tensor_product", is_tensor_product(part, uj, uk));
    for (auto [name, U, L] : {std::tuple{"U_j", &uj, &b.lines[j]}, std::tuple{"U_k", &uk, &b.lines[k]}}) {
      const auto w = wreath_shape(part, *U, *L);
      rep.add(std::string(name) + "_wreath_Cp_by_C2",
              w.ok && w.base_rank == p && w.base_is_group_ring && w.top_rank == 2 && w.top_is_group_ring,
              "base rank " + std::to_string(w.base_rank) + ", top rank " + std::to_string(w.top_rank));
    }
  } else if (level->kind == FusionLevel::Kind::zero) {
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    const auto w = wreath_shape(part, all, b.p_part);
    rep.add("wreath_Cp2_by_C2xC2",
            w.ok && w.base_rank == p * p && w.base_is_group_ring && w.top_rank == 4 && w.top_is_group_ring,
            "base rank " + std::to_string(w.base_rank) + ", top rank " + std::to_string(w.top_rank));
    const auto sc = structure_constants(part);
    bool blocks = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const int k = 3 - i - j;
        blocks = blocks && sc(part.index_of(b.blocks[i]), part.index_of(b.blocks[j]), part.index_of(b.blocks[k])) ==
                               static_cast<long long>(p) * p;
      }
    rep.add("block_products_p^2", blocks);
  } else if (level->kind == FusionLevel::Kind::pair) {
    rep.add("fusion_of_S_i", is_fusion(part, fusion_partition(b, FusionLevel::single(level->i))));
    rep.add("fusion_of_S_j", is_fusion(part, fusion_partition(b, FusionLevel::single(level->j))));
    rep.add("fusion_of_S_0_is_coarser", is_fusion(fusion_partition(b, FusionLevel::zero()), part));
  }
  return rep;
}

Report verify_A_properties(const BasicSetPartition& part, const PaperGroupBundle& b) {
  Report rep;
  const GroupTable& g = *b.group;
  const int p = b.p;
  std::optional<StructureConstants> sc;
  rep.merge(validate_schur(part, &sc), "schur.");
  if (!sc) return rep;

  std::vector<int> thin;
  for (const auto& s : part.sets())
    if (s.size() == 1) thin.push_back(s.front());
  const auto radical = generated_elements(g, thin);
  rep.add("A1.thin_radical_is_P", radical == b.p_part, std::to_string(radical.size()) + " elements");
  // Every basic set lies in one P-coset, so the quotient is the group ring of G/P.
  bool in_one_coset = true;
  for (const auto& s : part.sets()) {
    const auto d = b.decode(s.front());
    for (int x : s) {
      const auto e = b.decode(x);
      in_one_coset = in_one_coset && e[0] == d[0] && e[1] == d[1];
    }
  }
  bool quotient_exp2 = true;
  for (int a : b.klein) quotient_exp2 = quotient_exp2 && g.mul(a, a) == g.identity();
  rep.add("A1.quotient_is_group_ring_C2xC2", in_one_coset && quotient_exp2 && b.klein.size() == 4);

  std::array<std::vector<int>, 3> rads;
  for (int i = 0; i < 3; ++i) {
    const auto& x = b.line_cosets[i];
    const std::string tag = "A2.X" + std::to_string(i + 1);
    std::vector<int> inv;
    for (int h : x) inv.push_back(g.inv(h));
    std::sort(inv.begin(), inv.end());
    rep.add(tag + ".basic_set", part.index_of(x) >= 0);
    rep.add(tag + ".inverse_closed", inv == x);
    rep.add(tag + ".size_p", static_cast<int>(x.size()) == p, std::to_string(x.size()));
    rads[i] = set_radical(g, x);
    rep.add(tag + ".radical_order_p", static_cast<int>(rads[i].size()) == p, std::to_string(rads[i].size()));
    rep.add(tag + ".radical_in_P", intersect_sorted(rads[i], b.p_part) == rads[i]);
    bool cyclic = false;
    for (int h : rads[i]) cyclic = cyclic || g.element_order(h) == static_cast<int>(rads[i].size());
    rep.add(tag + ".radical_cyclic", cyclic);
  }
  bool meet_trivially = true;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      meet_trivially = meet_trivially && intersect_sorted(rads[i], rads[j]) == std::vector<int>{g.identity()};
  rep.add("A2.radicals_meet_trivially", meet_trivially);

  // cosets[i]: indices of the basic sets X_i g, g in P
  std::array<std::vector<int>, 3> cosets;
  std::vector<int> coset_of(part.size(), -1);
  for (int i = 0; i < 3; ++i) {
    for (int q : b.p_part) {
      std::vector<int> t;
      for (int x : b.line_cosets[i]) t.push_back(g.mul(x, q));
      std::sort(t.begin(), t.end());
      const int k = part.index_of(t);
      if (k >= 0 && coset_of[k] < 0) {
        coset_of[k] = i;
        cosets[i].push_back(k);
      }
    }
  }
  bool coset_counts = true;
  for (int i = 0; i < 3; ++i) coset_counts = coset_counts && static_cast<int>(cosets[i].size()) == p;
  rep.add("A3.cosets_are_basic_sets", coset_counts);
  long long triples = 0, mismatches = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const int k = 3 - i - j;
      for (int ti : cosets[i])
        for (int tj : cosets[j])
          for (int t = 0; t < part.size(); ++t) {
            ++triples;
            if (((*sc)(ti, tj, t) > 0) != (coset_of[t] == k)) ++mismatches;
          }
    }
  rep.add("A3.positivity_pattern", mismatches == 0 && coset_counts,
          std::to_string(triples) + " triples, " + std::to_string(mismatches) + " mismatches");
  bool unit = coset_counts;
  const int x1 = part.index_of(b.line_cosets[0]), x2 = part.index_of(b.line_cosets[1]);
  for (int t : cosets[2]) unit = unit && (*sc)(x1, x2, t) == 1;
  rep.add("A3.X1X2_unit_over_X3_cosets", unit);
  return rep;
}

Scheme cayley_scheme(const BasicSetPartition& part) {
  const GroupTable& g = part.group();
  const int n = g.order();
  std::vector<int> colors(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const int ai = g.inv(a);
    for (int b = 0; b < n; ++b) colors[static_cast<std::size_t>(a) * n + b] = part.set_of(g.mul(b, ai));
  }
  return Scheme::assume_coherent(n, std::move(colors));
}

std::vector<int> set_colors(const Scheme& scheme, const BasicSetPartition& part) {
  const int e = part.group().identity();
  std::vector<int> out(part.size());
  for (int k = 0; k < part.size(); ++k) out[k] = scheme.color(e, part.set(k).front());
  return out;
}

Scheme regular_scheme(const GroupTable& group) {
  return cayley_scheme(BasicSetPartition::singletons(std::make_shared<const GroupTable>(group)));
}

bool preserves_structure_constants(std::span<const int> psi, const StructureConstants& src,
                                   const StructureConstants& dst) {
  if (static_cast<int>(psi.size()) != src.num_sets() || src.num_sets() != dst.num_sets()) return false;
  std::vector<char> hit(psi.size(), 0);
  for (int v : psi) {
    if (v < 0 || v >= dst.num_sets() || hit[v]) return false;
    hit[v] = 1;
  }
  if (src.entries().size() != dst.entries().size()) return false;
  for (const auto& e : src.entries())
    if (dst(psi[e.x], psi[e.y], psi[e.z]) != e.c) return false;
  return true;
}

CayleyIsoResult cayley_iso_from_algebraic(std::span<const int> psi, const PaperGroupBundle& b,
                                          const BasicSetPartition& src, const BasicSetPartition& dst) {
  CayleyIsoResult r;
  const GroupTable& G = *b.group;
  const GroupTable& H = dst.group();
  if (G.order() != H.order()) {
    r.diagnostic = "groups have different orders";
    return r;
  }
  if (!(src == paper_partition(b))) {
    r.diagnostic = "source is not the basic-set partition of the bundle";
    return r;
  }
  std::optional<StructureConstants> dst_sc;
  if (!validate_schur(dst, &dst_sc).ok() || !dst_sc) {
    r.diagnostic = "target is not a Schur partition";
    return r;
  }
  for (std::size_t k = 0; k < psi.size(); ++k)
    if (psi[k] < 0 || psi[k] >= dst.size() || src.set(static_cast<int>(k)).size() != dst.set(psi[k]).size()) {
      r.diagnostic = "psi does not preserve set sizes";
      return r;
    }
  if (!preserves_structure_constants(psi, structure_constants(src), *dst_sc)) {
    r.diagnostic = "psi does not preserve structure constants";
    return r;
  }

  // f0 on P from singleton images.
  std::vector<int> f(G.order(), -1);
  for (int q : b.p_part) {
    const auto& image = dst.set(psi[src.set_of(q)]);
    if (image.size() != 1) {
      r.diagnostic = "image of a singleton of P is not a singleton";
      return r;
    }
    f[q] = image.front();
  }
  std::array<int, 3> inv_image{};
  for (int i = 0; i < 3; ++i) {
    const auto& image = dst.set(psi[src.index_of(b.line_cosets[i])]);
    std::vector<int> involutions;
    for (int h : image)
      if (H.element_order(h) == 2) involutions.push_back(h);
    if (involutions.size() != 1) {
      r.diagnostic = "image of X" + std::to_string(i + 1) + " has " + std::to_string(involutions.size()) +
                     " involutions";
      return r;
    }
    inv_image[i] = involutions.front();
  }
  for (int x = 0; x < G.order(); ++x) {
    const auto d = b.decode(x);
    const int a = b.encode(d[0], d[1], 0, 0);
    const int q = b.encode(0, 0, d[2], d[3]);
    if (a == G.identity()) continue;
    const int i = static_cast<int>(std::find(b.involutions.begin(), b.involutions.end(), a) - b.involutions.begin());
    f[x] = H.mul(f[q], inv_image[i]);
  }

  std::vector<char> hit(H.order(), 0);
  for (int h : f) {
    if (hit[h]) {
      r.diagnostic = "extension is not injective";
      return r;
    }
    hit[h] = 1;
  }
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < G.order(); ++y)
      if (f[G.mul(x, y)] != H.mul(f[x], f[y])) {
        r.diagnostic = "extension is not multiplicative";
        return r;
      }
  for (int k = 0; k < src.size(); ++k) {
    std::vector<int> image;
    for (int x : src.set(k)) image.push_back(f[x]);
    std::sort(image.begin(), image.end());
    if (dst.index_of(image) != psi[k]) {
      r.diagnostic = "f does not induce psi on set " + std::to_string(k);
      return r;
    }
  }
  r.ok = true;
  r.map = std::move(f);
  return r;
}

}  // namespace ccs
