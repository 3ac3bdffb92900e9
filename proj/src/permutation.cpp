#include "ccs/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace ccs {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<int> orbit_of(int degree, std::span<const Permutation> gens, int point) {
  std::vector<char> seen(degree, 0);
  std::vector<int> orbit{point};
  seen[point] = 1;
  for (std::size_t h = 0; h < orbit.size(); ++h)
    for (const auto& s : gens) {
      const int y = s[orbit[h]];
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  return orbit;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || hit[x]) throw std::invalid_argument("not a permutation");
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) p.images_[x] = other.images_[images_[x]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) p.images_[images_[x]] = static_cast<int>(x);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

int Permutation::num_fixed_points() const {
  int k = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) k += images_[x] == static_cast<int>(x);
  return k;
}

bool is_automorphism(const Scheme& scheme, const Permutation& g) {
  const int n = scheme.degree();
  if (g.degree() != n) return false;
  for (int a = 0; a < n; ++a) {
    const auto row = scheme.row(a);
    const auto img = scheme.row(g[a]);
    for (int b = 0; b < n; ++b)
      if (row[b] != img[g[b]]) return false;
  }
  return true;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_prefix)
    : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator has the wrong degree");
    if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(std::move(g));
  }
  build(std::move(base_prefix));
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(int degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    auto t = Permutation::identity(degree).images();
    std::swap(t[0], t[1]);
    gens.emplace_back(t);
    std::vector<int> c(degree);
    for (int x = 0; x < degree; ++x) c[x] = (x + 1) % degree;
    gens.emplace_back(c);
  }
  return PermGroup(degree, std::move(gens));
}

int PermGroup::moved_point_not_in_base(const Permutation& g) const {
  for (int x = 0; x < degree_; ++x)
    if (g[x] != x && std::find(base_.begin(), base_.end(), x) == base_.end()) return x;
  return -1;
}

void PermGroup::compute_orbit(int k) {
  Level& lv = levels_[k];
  lv.orbit = {lv.point};
  lv.rep.assign(degree_, -1);
  lv.reps = {Permutation::identity(degree_)};
  lv.inv_reps = {Permutation::identity(degree_)};
  lv.rep[lv.point] = 0;
  for (std::size_t h = 0; h < lv.orbit.size(); ++h) {
    const int x = lv.orbit[h];
    for (const auto& s : lv.gens) {
      const int y = s[x];
      if (lv.rep[y] >= 0) continue;
      lv.rep[y] = static_cast<int>(lv.reps.size());
      lv.reps.push_back(lv.reps[lv.rep[x]] * s);
      lv.inv_reps.push_back(lv.reps.back().inverse());
      lv.orbit.push_back(y);
    }
  }
}

std::pair<Permutation, int> PermGroup::sift(const Permutation& g, int start) const {
  Permutation h = g;
  for (int k = start; k < num_levels(); ++k) {
    const int idx = levels_[k].rep[h[levels_[k].point]];
    if (idx < 0) return {h, k};
    h = h * levels_[k].inv_reps[idx];
  }
  return {h, num_levels()};
}

void PermGroup::build(std::vector<int> prefix) {
  base_.clear();
  levels_.clear();
  for (int x : prefix) {
    if (x < 0 || x >= degree_) throw std::invalid_argument("base point out of range");
    if (std::find(base_.begin(), base_.end(), x) == base_.end()) base_.push_back(x);
  }
  std::vector<Permutation> strong = generators_;
  for (const auto& g : strong) {
    bool fixes_base = true;
    for (int b : base_) fixes_base = fixes_base && g[b] == b;
    if (fixes_base) base_.push_back(moved_point_not_in_base(g));
  }
  levels_.resize(base_.size());
  for (std::size_t k = 0; k < base_.size(); ++k) {
    levels_[k].point = base_[k];
    for (const auto& g : strong) {
      bool fixes = true;
      for (std::size_t l = 0; l < k; ++l) fixes = fixes && g[base_[l]] == base_[l];
      if (fixes) levels_[k].gens.push_back(g);
    }
    compute_orbit(static_cast<int>(k));
  }

  int i = num_levels() - 1;
  while (i >= 0) {
    bool restarted = false;
    Level& lv = levels_[i];
    for (std::size_t oi = 0; oi < lv.orbit.size() && !restarted; ++oi) {
      const int gamma = lv.orbit[oi];
      for (std::size_t si = 0; si < lv.gens.size(); ++si) {
        const Permutation& s = lv.gens[si];
        Permutation h = lv.reps[lv.rep[gamma]] * s * lv.inv_reps[lv.rep[s[gamma]]];
        if (h.is_identity()) continue;
        auto [residue, j] = sift(h, i + 1);
        if (j == num_levels() && residue.is_identity()) continue;
        if (j == num_levels()) {
          base_.push_back(moved_point_not_in_base(residue));
          levels_.emplace_back();
          levels_.back().point = base_.back();
        }
        for (int l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          compute_orbit(l);
        }
        i = j;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

BigInt PermGroup::order() const {
  BigInt n = 1;
  for (const auto& lv : levels_) n *= static_cast<unsigned>(lv.orbit.size());
  return n;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, level] = sift(g);
  return level == num_levels() && residue.is_identity();
}

std::vector<Permutation> PermGroup::elements(std::uint64_t limit) const {
  if (order() > limit) throw std::length_error("group too large to enumerate");
  std::vector<Permutation> out{Permutation::identity(degree_)};
  // g = u_{L-1} ... u_0, built from the deepest level outward.
  for (int k = num_levels() - 1; k >= 0; --k) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[k].reps.size());
    for (const auto& g : out)
      for (const auto& u : levels_[k].reps) next.push_back(g * u);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (int k = num_levels() - 1; k >= 0; --k) {
    // plain modulus keeps the sequence identical across standard libraries
    g = g * levels_[k].reps[rng() % levels_[k].reps.size()];
  }
  return g;
}

std::vector<int> PermGroup::orbit_labels(int degree, std::span<const Permutation> gens) {
  UnionFind uf(degree);
  for (const auto& g : gens)
    for (int x = 0; x < degree; ++x) uf.unite(x, g[x]);
  std::vector<int> label(degree);
  for (int x = 0; x < degree; ++x) label[x] = uf.find(x);
  return label;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  const auto label = orbit_labels(degree_, generators_);
  std::vector<std::vector<int>> out;
  std::vector<int> index(degree_, -1);
  for (int x = 0; x < degree_; ++x) {
    if (index[label[x]] < 0) {
      index[label[x]] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index[label[x]]].push_back(x);
  }
  return out;
}

PermGroup PermGroup::with_base(std::vector<int> prefix) const {
  PermGroup g;
  g.degree_ = degree_;
  g.generators_ = generators_;
  g.build(std::move(prefix));
  return g;
}

PermGroup PermGroup::with_generator(const Permutation& x) const {
  std::vector<Permutation> gens = generators_;
  gens.push_back(x);
  return PermGroup(degree_, std::move(gens), base_);
}

Report PermGroup::verify() const {
  Report r;
  bool reps_ok = true, schreier_ok = true, gens_ok = true;
  for (int k = 0; k < num_levels(); ++k) {
    const Level& lv = levels_[k];
    for (int gamma : lv.orbit) {
      const auto& u = lv.reps[lv.rep[gamma]];
      reps_ok = reps_ok && u[lv.point] == gamma && (u * lv.inv_reps[lv.rep[gamma]]).is_identity();
      for (int l = 0; l < k; ++l) reps_ok = reps_ok && u[base_[l]] == base_[l];
      for (const auto& s : lv.gens) {
        const Permutation h = u * s * lv.inv_reps[lv.rep[s[gamma]]];
        auto [residue, level] = sift(h, k + 1);
        schreier_ok = schreier_ok && level == num_levels() && residue.is_identity();
      }
    }
  }
  for (const auto& g : generators_) gens_ok = gens_ok && contains(g);
  r.add("transversals", reps_ok);
  r.add("schreier_generators_sift", schreier_ok);
  r.add("generators_contained", gens_ok);
  return r;
}

PermGroup right_translations(const GroupTable& group) {
  const int n = group.order();
  std::vector<int> gens;
  std::vector<int> reached{group.identity()};
  for (int y = 0; y < n && static_cast<int>(reached.size()) < n; ++y) {
    if (std::binary_search(reached.begin(), reached.end(), y)) continue;
    gens.push_back(y);
    reached = generated_elements(group, gens);
  }
  std::vector<Permutation> perms;
  for (int y : gens) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) img[x] = group.mul(x, y);
    perms.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(perms));
}

Scheme two_orbit_partition(const PermGroup& group) {
  const int n = group.degree();
  const auto N = static_cast<std::size_t>(n);
  UnionFind uf(N * N);
  for (const auto& g : group.generators())
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) uf.unite(static_cast<int>(a * N + b), static_cast<int>(g[a] * N + g[b]));
  std::vector<int> colors(N * N);
  for (std::size_t i = 0; i < N * N; ++i) colors[i] = uf.find(static_cast<int>(i));
  return Scheme::assume_coherent(n, std::move(colors));
}

std::string_view regularity_name(Regularity r) {
  switch (r) {
    case Regularity::regular: return "regular";
    case Regularity::semiregular_intransitive: return "semiregular-intransitive";
    case Regularity::transitive_nonregular: return "transitive-nonregular";
    case Regularity::other: return "other";
  }
  return "other";
}

Regularity regularity_class(const PermGroup& group) {
  const auto orbits = group.orbits();
  const BigInt order = group.order();
  bool semiregular = true;
  for (const auto& o : orbits) semiregular = semiregular && order == static_cast<unsigned>(o.size());
  const bool transitive = orbits.size() == 1;
  if (transitive && semiregular) return Regularity::regular;
  if (semiregular) return Regularity::semiregular_intransitive;
  if (transitive) return Regularity::transitive_nonregular;
  return Regularity::other;
}

namespace {

PermGroup closure_of(int degree, const std::vector<Permutation>& candidates, std::vector<int> base) {
  PermGroup k(degree, {}, base);
  for (const auto& g : candidates)
    if (!k.contains(g)) k = k.with_generator(g);
  return k;
}

PermGroup intersect_by_enumeration(const PermGroup& a, const PermGroup& b) {
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& other = &small == &a ? b : a;
  std::vector<Permutation> common;
  for (auto& g : small.elements(std::numeric_limits<std::uint64_t>::max()))
    if (other.contains(g)) common.push_back(std::move(g));
  return closure_of(a.degree(), common, a.base());
}

class IntersectionSearch {
 public:
  IntersectionSearch(const PermGroup& a, const PermGroup& b)
      : a_(a), b_(b.with_base(a.base())), n_(a.degree()), levels_(a.num_levels()) {}

  PermGroup run() {
    PermGroup k(n_, {}, a_.base());
    for (int j = levels_ - 1; j >= 0; --j) {
      std::vector<char> failed(n_, 0);
      std::vector<int> orbit = a_.level_orbit(j);
      std::sort(orbit.begin(), orbit.end());
      const int beta = a_.base()[j];
      for (int gamma : orbit) {
        if (gamma == beta || failed[gamma] || k.in_level_orbit(j, gamma)) continue;
        auto found = search(j, gamma);
        if (found) {
          k = k.with_generator(*found);
        } else {
          for (int x : orbit_of(n_, k.level_generators(j), gamma)) failed[x] = 1;
        }
      }
    }
    return k;
  }

 private:
  // An element of a ∩ b fixing base[0..j) and sending base[j] to gamma.
  std::optional<Permutation> search(int j, int gamma) {
    const auto id = Permutation::identity(n_);
    return dfs(j, gamma, id, id, id);
  }

  // prefix = u_{l-1} ... u_j in a; y maps base[0..l) like prefix and lies in b.
  std::optional<Permutation> dfs(int l, int forced, const Permutation& prefix, const Permutation& y,
                                 const Permutation& y_inv) {
    if (l == levels_) {
      if (b_.contains(prefix)) return prefix;
      return std::nullopt;
    }
    const int beta = a_.base()[l];
    std::vector<int> choices;
    if (forced >= 0) choices = {forced};
    else {
      choices = a_.level_orbit(l);
      std::sort(choices.begin(), choices.end());
    }
    for (int gamma : choices) {
      // u with beta^u = gamma, then the image under the whole product.
      const auto& u = a_.transversal(l, gamma);
      const Permutation next = u * prefix;
      const int image = next[beta];
      const int delta = y_inv[image];
      Permutation ny = y, ny_inv = y_inv;
      if (l < b_.num_levels()) {
        if (!b_.in_level_orbit(l, delta)) continue;
        const auto& v = b_.transversal(l, delta);
        ny = v * y;
        ny_inv = ny.inverse();
      } else if (delta != beta) {
        continue;
      }
      if (auto r = dfs(l + 1, -1, next, ny, ny_inv)) return r;
    }
    return std::nullopt;
  }

  const PermGroup& a_;
  PermGroup b_;
  int n_;
  int levels_;
};

}  // namespace

PermGroup group_intersection(const PermGroup& a, const PermGroup& b, IntersectionMethod method) {
  if (a.degree() != b.degree()) throw std::invalid_argument("groups have different degrees");
  if (method == IntersectionMethod::automatic)
    method = std::min(a.order(), b.order()) <= 10000 ? IntersectionMethod::enumerate : IntersectionMethod::backtrack;
  if (method == IntersectionMethod::enumerate) return intersect_by_enumeration(a, b);
  return IntersectionSearch(a, b).run();
}

}  // namespace ccs
