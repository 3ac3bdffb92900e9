#include "ccs/group_table.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ccs {

namespace {

std::string default_product_label(const GroupTable& a, const GroupTable& b) {
  return a.label() + "x" + b.label();
}

bool contains_sorted(std::span<const int> set, int g) {
  return std::binary_search(set.begin(), set.end(), g);
}

}  // namespace

GroupTable::GroupTable(int order, std::vector<int> table, std::string label)
    : order_(order), table_(std::move(table)), label_(std::move(label)) {
  if (order_ <= 0) throw std::invalid_argument("group order must be positive");
  const auto n = static_cast<std::size_t>(order_);
  if (table_.size() != n * n) throw std::invalid_argument("product table has wrong size");

  // Latin square: every row and column is a permutation.
  std::vector<int> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      int v = table_[a * n + b];
      if (v < 0 || v >= order_ || seen[v]++) throw std::invalid_argument("product table is not a Latin square");
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a)
      if (seen[table_[a * n + b]]++) throw std::invalid_argument("product table is not a Latin square");
  }

  identity_ = -1;
  for (int e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < order_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("product table has no identity");

  inverse_.assign(n, -1);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
  for (int a = 0; a < order_; ++a)
    if (mul(inverse_[a], a) != identity_) throw std::invalid_argument("left and right inverses differ");
}

int GroupTable::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

int GroupTable::exponent() const {
  int e = 1;
  for (int a = 0; a < order_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> GroupTable::center() const {
  std::vector<int> z;
  for (int a = 0; a < order_; ++a) {
    bool central = true;
    for (int b = 0; b < order_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

Report GroupTable::check_axioms() const {
  Report r;
  bool assoc = true;
  for (int a = 0; a < order_ && assoc; ++a)
    for (int b = 0; b < order_ && assoc; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < order_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) {
          assoc = false;
          break;
        }
    }
  r.add("associativity", assoc);

  bool ident = true, inverse = true;
  for (int a = 0; a < order_; ++a) {
    ident = ident && mul(identity_, a) == a && mul(a, identity_) == a;
    inverse = inverse && mul(a, inv(a)) == identity_ && mul(inv(a), a) == identity_;
  }
  r.add("identity", ident);
  r.add("inverse", inverse);

  bool latin = true;
  std::vector<char> row(order_), col(order_);
  for (int a = 0; a < order_ && latin; ++a) {
    std::fill(row.begin(), row.end(), 0);
    std::fill(col.begin(), col.end(), 0);
    for (int b = 0; b < order_; ++b) {
      latin = latin && !row[mul(a, b)] && !col[mul(b, a)];
      row[mul(a, b)] = col[mul(b, a)] = 1;
    }
  }
  r.add("latin_square", latin);
  return r;
}

GroupTable GroupTable::cyclic(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return GroupTable(n, std::move(t), "C" + std::to_string(n));
}

GroupTable GroupTable::dihedral(int m) {
  const int n = 2 * m;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  // r^k s^e * r^l s^f = r^(k + (-1)^e l) s^(e+f)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int e = x / m, k = x % m, f = y / m, l = y % m;
      int rot = e ? (k - l + m) % m : (k + l) % m;
      t[x * n + y] = ((e + f) % 2) * m + rot;
    }
  return GroupTable(n, std::move(t), "D" + std::to_string(n));
}

GroupTable GroupTable::generalized_dihedral(const GroupTable& abelian, std::string label) {
  const int m = abelian.order();
  const int n = 2 * m;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int e = x / m, a = x % m, f = y / m, b = y % m;
      int rot = abelian.mul(a, e ? abelian.inv(b) : b);
      t[x * n + y] = ((e + f) % 2) * m + rot;
    }
  if (label.empty()) label = "Dih(" + abelian.label() + ")";
  return GroupTable(n, std::move(t), std::move(label));
}

GroupTable GroupTable::direct_product(const GroupTable& lhs, const GroupTable& rhs, std::string label) {
  const int m = rhs.order();
  const int n = lhs.order() * m;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<std::size_t>(x) * n + y] = lhs.mul(x / m, y / m) * m + rhs.mul(x % m, y % m);
  if (label.empty()) label = default_product_label(lhs, rhs);
  return GroupTable(n, std::move(t), std::move(label));
}

std::vector<int> generated_elements(const GroupTable& g, std::span<const int> generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> queue{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (int s : generators) {
      const int y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<int> intersect_sorted(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const GroupTable& g = *parent_;
  if (!contains(g.identity())) throw std::invalid_argument("subgroup must contain the identity");
  for (int a : elements_) {
    if (!contains(g.inv(a))) throw std::invalid_argument("subgroup not closed under inverses");
    for (int b : elements_)
      if (!contains(g.mul(a, b))) throw std::invalid_argument("subgroup not closed under products");
  }
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const int> generators) {
  auto elems = generated_elements(*parent, generators);
  return Subgroup(std::move(parent), std::move(elems));
}

bool Subgroup::contains(int g) const { return contains_sorted(elements_, g); }

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void check_prime_parameter(int p, int max_p, bool override_max_p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (p < 5) throw std::invalid_argument("p must be at least 5");
  if (p > max_p && !override_max_p)
    throw std::invalid_argument("p = " + std::to_string(p) + " exceeds the maximum " + std::to_string(max_p) +
                                " (pass the override flag to allow it)");
}

int PaperGroupBundle::encode(int x1, int x2, int y1, int y2) const {
  return ((x1 * 2 + x2) * p + y1) * p + y2;
}

std::array<int, 4> PaperGroupBundle::decode(int g) const {
  const int y2 = g % p;
  g /= p;
  const int y1 = g % p;
  g /= p;
  return {g / 2, g % 2, y1, y2};
}

PaperGroupBundle build_paper_group(int p, const PaperGroupOptions& options) {
  check_prime_parameter(p, options.max_p, options.override_max_p);

  PaperGroupBundle b;
  b.p = p;
  const int n = 4 * p * p;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    auto u = b.decode(x);
    for (int y = 0; y < n; ++y) {
      auto v = b.decode(y);
      t[static_cast<std::size_t>(x) * n + y] =
          b.encode((u[0] + v[0]) % 2, (u[1] + v[1]) % 2, (u[2] + v[2]) % p, (u[3] + v[3]) % p);
    }
  }
  const std::string ps = std::to_string(p);
  b.group = std::make_shared<const GroupTable>(n, std::move(t), "C2xC2xC" + ps + "xC" + ps);

  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2) b.klein.push_back(b.encode(x1, x2, 0, 0));
  for (int y1 = 0; y1 < p; ++y1)
    for (int y2 = 0; y2 < p; ++y2) b.p_part.push_back(b.encode(0, 0, y1, y2));
  std::sort(b.klein.begin(), b.klein.end());

  std::set<std::array<int, 2>> invs;
  for (int i = 0; i < 3; ++i) {
    auto [x1, x2] = options.involutions[i];
    x1 = ((x1 % 2) + 2) % 2;
    x2 = ((x2 % 2) + 2) % 2;
    if (x1 == 0 && x2 == 0) throw std::invalid_argument("involution choice must be nonzero");
    invs.insert({x1, x2});
    b.involutions[i] = b.encode(x1, x2, 0, 0);
  }
  if (invs.size() != 3) throw std::invalid_argument("involution choices must be pairwise distinct");

  for (int i = 0; i < 3; ++i) {
    auto [d1, d2] = options.lines[i];
    d1 = ((d1 % p) + p) % p;
    d2 = ((d2 % p) + p) % p;
    if (d1 == 0 && d2 == 0) throw std::invalid_argument("line generator must be nonzero");
    std::vector<int> line;
    for (int k = 0; k < p; ++k) line.push_back(b.encode(0, 0, k * d1 % p, k * d2 % p));
    std::sort(line.begin(), line.end());
    b.lines[i] = std::move(line);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (b.lines[i] == b.lines[j]) throw std::invalid_argument("line subgroups must be pairwise distinct");

  const GroupTable& g = *b.group;
  for (int i = 0; i < 3; ++i) {
    for (int x : b.lines[i]) b.line_cosets[i].push_back(g.mul(x, b.involutions[i]));
    for (int x : b.p_part) b.blocks[i].push_back(g.mul(x, b.involutions[i]));
    std::sort(b.line_cosets[i].begin(), b.line_cosets[i].end());
    std::sort(b.blocks[i].begin(), b.blocks[i].end());
  }
  return b;
}

std::vector<int> linear_automorphism(const PaperGroupBundle& b, std::array<int, 4> m2, std::array<int, 4> mp) {
  const int p = b.p;
  auto mod = [](int x, int m) { return ((x % m) + m) % m; };
  if (mod(m2[0] * m2[3] - m2[1] * m2[2], 2) == 0) throw std::invalid_argument("matrix over Z_2 is singular");
  if (mod(mp[0] * mp[3] - mp[1] * mp[2], p) == 0) throw std::invalid_argument("matrix over Z_p is singular");
  std::vector<int> f(b.group->order());
  for (int g = 0; g < b.group->order(); ++g) {
    const auto [x1, x2, y1, y2] = b.decode(g);
    f[g] = b.encode(mod(m2[0] * x1 + m2[1] * x2, 2), mod(m2[2] * x1 + m2[3] * x2, 2),
                    mod(mp[0] * y1 + mp[1] * y2, p), mod(mp[2] * y1 + mp[3] * y2, p));
  }
  return f;
}

std::vector<int> set_radical(const GroupTable& g, std::span<const int> set) {
  std::vector<int> rad;
  std::vector<int> left, right;
  for (int h = 0; h < g.order(); ++h) {
    left.clear();
    right.clear();
    for (int x : set) {
      left.push_back(g.mul(h, x));
      right.push_back(g.mul(x, h));
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (std::equal(left.begin(), left.end(), set.begin(), set.end()) &&
        std::equal(right.begin(), right.end(), set.begin(), set.end()))
      rad.push_back(h);
  }
  return rad;
}

Report check_bundle(const PaperGroupBundle& b) {
  const GroupTable& g = *b.group;
  const int p = b.p;
  Report r;
  r.add("group_order", g.order() == 4 * p * p, std::to_string(g.order()));
  r.add("involutions_product", g.mul(b.involutions[0], b.involutions[1]) == b.involutions[2]);
  bool invol = true;
  for (int a : b.involutions) invol = invol && a != g.identity() && g.element_order(a) == 2;
  r.add("involutions_order_two", invol);

  bool trivial_meet = true;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      trivial_meet = trivial_meet && intersect_sorted(b.lines[i], b.lines[j]) == std::vector<int>{g.identity()};
  r.add("lines_meet_trivially", trivial_meet);

  bool sizes = true, self_inverse = true, radical = true, blocks = true;
  for (int i = 0; i < 3; ++i) {
    const auto& x = b.line_cosets[i];
    sizes = sizes && static_cast<int>(x.size()) == p && static_cast<int>(b.blocks[i].size()) == p * p;
    std::vector<int> inv;
    for (int e : x) inv.push_back(g.inv(e));
    std::sort(inv.begin(), inv.end());
    self_inverse = self_inverse && inv == x;
    radical = radical && set_radical(g, x) == b.lines[i];
    std::set<int> uni;
    for (int h : b.p_part)
      for (int e : x) uni.insert(g.mul(e, h));
    blocks = blocks && std::vector<int>(uni.begin(), uni.end()) == b.blocks[i];
  }
  r.add("coset_sizes", sizes);
  r.add("cosets_inverse_closed", self_inverse);
  r.add("coset_radicals_are_lines", radical);
  r.add("blocks_are_unions_of_cosets", blocks);

  bool products = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const int k = 3 - i - j;
      for (int x : b.line_cosets[i])
        for (int y : b.line_cosets[j]) products = products && contains_sorted(b.blocks[k], g.mul(x, y));
    }
  r.add("coset_products_land_in_third_block", products);
  return r;
}

std::string_view candidate_name(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::c2p_x_c2p: return "C2pxC2p";
    case CandidateKind::c2p_x_d2p: return "C2pxD2p";
    case CandidateKind::d2p_x_d2p: return "D2pxD2p";
    case CandidateKind::cp2_semidirect_c2_x_c2: return "Cp2_semidirect_C2_x_C2";
  }
  return "unknown";
}

CandidateKind parse_candidate_kind(std::string_view name) {
  for (auto k : kAllCandidateKinds)
    if (candidate_name(k) == name) return k;
  throw std::invalid_argument("unknown candidate group kind: " + std::string(name));
}

GroupTable build_candidate_group(CandidateKind kind, int p) {
  if (!is_prime(p) || p < 5) throw std::invalid_argument("candidate groups need a prime p >= 5");
  const std::string label(candidate_name(kind));
  switch (kind) {
    case CandidateKind::c2p_x_c2p:
      return GroupTable::direct_product(GroupTable::cyclic(2 * p), GroupTable::cyclic(2 * p), label);
    case CandidateKind::c2p_x_d2p:
      return GroupTable::direct_product(GroupTable::cyclic(2 * p), GroupTable::dihedral(p), label);
    case CandidateKind::d2p_x_d2p:
      return GroupTable::direct_product(GroupTable::dihedral(p), GroupTable::dihedral(p), label);
    case CandidateKind::cp2_semidirect_c2_x_c2: {
      auto cp2 = GroupTable::direct_product(GroupTable::cyclic(p), GroupTable::cyclic(p));
      return GroupTable::direct_product(GroupTable::generalized_dihedral(cp2), GroupTable::cyclic(2), label);
    }
  }
  throw std::invalid_argument("unknown candidate group kind");
}

std::map<int, int> order_census(const GroupTable& g) {
  std::map<int, int> census;
  for (int a = 0; a < g.order(); ++a) ++census[g.element_order(a)];
  return census;
}

SylowInfo sylow_subgroups(const GroupTable& g, int p) {
  if (p < 2 || !is_prime(p) || g.order() % p != 0)
    throw std::invalid_argument("prime " + std::to_string(p) + " does not divide the group order");
  int sylow_order = 1;
  for (int n = g.order(); n % p == 0; n /= p) sylow_order *= p;

  auto is_p_power = [p](int m) {
    while (m % p == 0) m /= p;
    return m == 1;
  };
  std::vector<int> p_elements;
  for (int a = 0; a < g.order(); ++a)
    if (is_p_power(g.element_order(a))) p_elements.push_back(a);

  // Grow a p-subgroup greedily; a maximal p-subgroup is a Sylow subgroup.
  std::vector<int> gens;
  std::vector<int> h{g.identity()};
  bool grown = true;
  while (static_cast<int>(h.size()) < sylow_order && grown) {
    grown = false;
    for (int y : p_elements) {
      if (std::binary_search(h.begin(), h.end(), y)) continue;
      gens.push_back(y);
      auto cand = generated_elements(g, gens);
      if (is_p_power(static_cast<int>(cand.size()))) {
        h = std::move(cand);
        grown = true;
        break;
      }
      gens.pop_back();
    }
  }
  if (static_cast<int>(h.size()) != sylow_order) throw std::logic_error("failed to grow a Sylow subgroup");

  std::set<std::vector<int>> conjugates;
  std::vector<int> c;
  for (int x = 0; x < g.order(); ++x) {
    c.clear();
    for (int s : h) c.push_back(g.mul(g.mul(x, s), g.inv(x)));
    std::sort(c.begin(), c.end());
    conjugates.insert(c);
  }
  SylowInfo info;
  info.prime = p;
  info.subgroup_order = sylow_order;
  info.subgroups.assign(conjugates.begin(), conjugates.end());
  return info;
}

}  // namespace ccs
