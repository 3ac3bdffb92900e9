#include "ccs/scheme.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

namespace ccs {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Maps arbitrary values onto 0..k-1 in increasing value order.
int compress(std::vector<int>& values) {
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int& v : values) v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
  return static_cast<int>(sorted.size());
}

// Assigns ids to signatures so that ids follow the lexicographic order of the
// signatures; the numbering is therefore independent of scan order.
class SignatureTable {
 public:
  int intern(const std::vector<int>& sig) {
    auto [it, inserted] = ids_.try_emplace(sig, static_cast<int>(ids_.size()));
    return it->second;
  }
  int size() const { return static_cast<int>(ids_.size()); }
  std::vector<int> sorted_relabeling() const {
    std::vector<const std::vector<int>*> keys(ids_.size());
    for (const auto& [k, id] : ids_) keys[id] = &k;
    std::vector<int> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return *keys[a] < *keys[b]; });
    std::vector<int> relabel(keys.size());
    for (std::size_t r = 0; r < order.size(); ++r) relabel[order[r]] = static_cast<int>(r);
    return relabel;
  }

 private:
  std::unordered_map<std::vector<int>, int, VecHash> ids_;
};

// One WL round on a densely numbered coloring of rank r. The signature of
// (a, b) is [c(a,b), c(b,a), a==b, then (s, t, count) triples in increasing
// (s, t) order for the color pairs seen along a -> g -> b].
std::vector<int> wl_round(int n, std::span<const int> c, int r, int& new_rank) {
  const auto N = static_cast<std::size_t>(n);
  std::vector<int> out(N * N);
  SignatureTable table;

  const bool dense = N * static_cast<std::size_t>(r) <= (std::size_t{1} << 26);
  std::vector<int> cnt(dense ? N * r : 0, 0);
  std::vector<std::vector<int>> touched(N);
  std::vector<std::vector<int>> sig(N);
  std::vector<int> order(N), start(r + 1);

  for (int a = 0; a < n; ++a) {
    const int* row_a = c.data() + a * N;
    std::fill(start.begin(), start.end(), 0);
    for (int g = 0; g < n; ++g) ++start[row_a[g] + 1];
    for (int s = 0; s < r; ++s) start[s + 1] += start[s];
    {
      std::vector<int> pos(start.begin(), start.end() - 1);
      for (int g = 0; g < n; ++g) order[pos[row_a[g]]++] = g;
    }
    for (int b = 0; b < n; ++b) {
      sig[b].clear();
      sig[b].push_back(row_a[b]);
      sig[b].push_back(c[b * N + a]);
      sig[b].push_back(a == b ? 1 : 0);
    }
    for (int s = 0; s < r; ++s) {
      if (start[s] == start[s + 1]) continue;
      for (int k = start[s]; k < start[s + 1]; ++k) {
        const int* row_g = c.data() + order[k] * N;
        if (dense) {
          for (int b = 0; b < n; ++b) {
            const int t = row_g[b];
            if (cnt[b * static_cast<std::size_t>(r) + t]++ == 0) touched[b].push_back(t);
          }
        } else {
          for (int b = 0; b < n; ++b) touched[b].push_back(row_g[b]);
        }
      }
      for (int b = 0; b < n; ++b) {
        auto& ts = touched[b];
        std::sort(ts.begin(), ts.end());
        if (dense) {
          for (int t : ts) {
            int& slot = cnt[b * static_cast<std::size_t>(r) + t];
            sig[b].insert(sig[b].end(), {s, t, slot});
            slot = 0;
          }
        } else {
          for (std::size_t i = 0; i < ts.size();) {
            std::size_t j = i;
            while (j < ts.size() && ts[j] == ts[i]) ++j;
            sig[b].insert(sig[b].end(), {s, ts[i], static_cast<int>(j - i)});
            i = j;
          }
        }
        ts.clear();
      }
    }
    for (int b = 0; b < n; ++b) out[a * N + b] = table.intern(sig[b]);
  }
  const auto relabel = table.sorted_relabeling();
  for (int& v : out) v = relabel[v];
  new_rank = table.size();
  return out;
}

}  // namespace

int canonicalize_colors(int degree, std::vector<int>& colors) {
  const auto n = static_cast<std::size_t>(degree);
  if (colors.size() != n * n) throw std::invalid_argument("color matrix has wrong size");
  const int r = compress(colors);

  struct Key {
    bool off_diagonal = false;
    long long count = 0;
    int rows = 0;
    int last_row = -1;
    std::pair<int, int> least{-1, -1};
  };
  std::vector<Key> keys(r);
  for (int a = 0; a < degree; ++a)
    for (int b = 0; b < degree; ++b) {
      Key& k = keys[colors[a * n + b]];
      if (k.least.first < 0) k.least = {a, b};
      if (a != b) k.off_diagonal = true;
      ++k.count;
      if (k.last_row != a) {
        k.last_row = a;
        ++k.rows;
      }
    }
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const Key& kx = keys[x];
    const Key& ky = keys[y];
    if (kx.off_diagonal != ky.off_diagonal) return !kx.off_diagonal;
    if (kx.off_diagonal) {
      const long long vx = kx.count / kx.rows, vy = ky.count / ky.rows;
      if (vx != vy) return vx < vy;
    }
    return kx.least < ky.least;
  });
  std::vector<int> relabel(r);
  for (int i = 0; i < r; ++i) relabel[order[i]] = i;
  for (int& v : colors) v = relabel[v];
  return r;
}

Scheme::Scheme(int degree, std::vector<int> colors, int rank)
    : degree_(degree), rank_(rank), colors_(std::move(colors)), info_(rank) {
  for (int a = 0; a < degree_; ++a)
    for (int b = 0; b < degree_; ++b) {
      ColorInfo& ci = info_[color(a, b)];
      ++ci.size;
      if (ci.least.first < 0) ci.least = {a, b};
      if (a == b) ci.diagonal = true;
    }
  for (int c = 0; c < rank_; ++c) {
    ColorInfo& ci = info_[c];
    auto [a, b] = ci.least;
    ci.transpose = color(b, a);
    ci.domain = color(a, a);
    ci.codomain = color(b, b);
    int v = 0;
    for (int x = 0; x < degree_; ++x) v += color(a, x) == c;
    ci.valency = v;
    if (ci.diagonal) ++num_diagonal_;
  }
}

Scheme Scheme::assume_coherent(int degree, std::vector<int> colors) {
  const int r = canonicalize_colors(degree, colors);
  return Scheme(degree, std::move(colors), r);
}

Scheme Scheme::from_colors(int degree, std::vector<int> colors) {
  const int r = canonicalize_colors(degree, colors);
  if (!is_wl_stable(degree, colors)) throw std::invalid_argument("coloring is not a coherent configuration");
  return Scheme(degree, std::move(colors), r);
}

bool is_wl_stable(int degree, std::span<const int> colors) {
  std::vector<int> c(colors.begin(), colors.end());
  const int r = compress(c);
  int next = 0;
  wl_round(degree, c, r, next);
  return next == r;
}

Scheme wl_stabilize(int degree, std::span<const int> initial, WlStats* stats) {
  const auto n = static_cast<std::size_t>(degree);
  if (initial.size() != n * n) throw std::invalid_argument("color matrix has wrong size");
  std::vector<int> c(initial.begin(), initial.end());
  int r = compress(c);
  WlStats local;
  local.initial_rank = r;
  for (;;) {
    int next = 0;
    auto refined = wl_round(degree, c, r, next);
    ++local.rounds;
    c = std::move(refined);
    if (next == r) break;
    r = next;
  }
  local.final_rank = r;
  if (stats) *stats = local;
  return Scheme::assume_coherent(degree, std::move(c));
}

IntersectionTensor::IntersectionTensor(int rank, std::vector<int> valencies, std::vector<int> transpose,
                                       std::vector<int> domain, std::vector<int> codomain,
                                       std::vector<Entry> entries)
    : rank_(rank),
      valencies_(std::move(valencies)),
      transpose_(std::move(transpose)),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& x, const Entry& y) { return std::tie(x.s, x.t, x.u) < std::tie(y.s, y.t, y.u); });
  const auto R = static_cast<std::size_t>(rank_);
  offsets_.assign(R * R + 1, 0);
  for (const auto& e : entries_) ++offsets_[static_cast<std::size_t>(e.s) * R + e.t + 1];
  for (std::size_t i = 0; i < R * R; ++i) offsets_[i + 1] += offsets_[i];
}

std::span<const IntersectionTensor::Entry> IntersectionTensor::products(int s, int t) const {
  const auto k = static_cast<std::size_t>(s) * rank_ + t;
  return std::span<const Entry>(entries_).subspan(offsets_[k], offsets_[k + 1] - offsets_[k]);
}

long long IntersectionTensor::operator()(int s, int t, int u) const {
  auto row = products(s, t);
  auto it = std::lower_bound(row.begin(), row.end(), u, [](const Entry& e, int v) { return e.u < v; });
  return it != row.end() && it->u == u ? it->c : 0;
}

Report IntersectionTensor::check_identities() const {
  Report r;
  bool sums = true, transposed = true;
  for (int s = 0; s < rank_; ++s)
    for (int t = 0; t < rank_; ++t) {
      long long total = 0;
      for (const auto& e : products(s, t)) total += e.c * valencies_[e.u];
      const long long expected =
          codomain_[s] == domain_[t] ? static_cast<long long>(valencies_[s]) * valencies_[t] : 0;
      sums = sums && total == expected;
    }
  for (const auto& e : entries_)
    transposed = transposed && (*this)(transpose_[e.t], transpose_[e.s], transpose_[e.u]) == e.c;
  r.add("valency_sums", sums);
  r.add("transpose_symmetry", transposed);
  return r;
}

bool IntersectionTensor::is_commutative() const {
  for (const auto& e : entries_)
    if ((*this)(e.t, e.s, e.u) != e.c) return false;
  return true;
}

bool IntersectionTensor::operator==(const IntersectionTensor& o) const {
  if (rank_ != o.rank_ || valencies_ != o.valencies_ || transpose_ != o.transpose_ ||
      entries_.size() != o.entries_.size())
    return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto &x = entries_[i], &y = o.entries_[i];
    if (x.s != y.s || x.t != y.t || x.u != y.u || x.c != y.c) return false;
  }
  return true;
}

IntersectionTensor intersection_tensor(const Scheme& scheme) {
  const int n = scheme.degree();
  const int r = scheme.rank();
  std::vector<int> valencies(r), transpose(r), domain(r), codomain(r);
  std::vector<IntersectionTensor::Entry> entries;
  std::vector<long long> keys(n);
  for (int u = 0; u < r; ++u) {
    valencies[u] = scheme.valency(u);
    transpose[u] = scheme.transpose(u);
    domain[u] = scheme.domain(u);
    codomain[u] = scheme.codomain(u);
    auto [a, b] = scheme.least_pair(u);
    for (int g = 0; g < n; ++g) keys[g] = static_cast<long long>(scheme.color(a, g)) * r + scheme.color(g, b);
    std::sort(keys.begin(), keys.end());
    for (int i = 0; i < n;) {
      int j = i;
      while (j < n && keys[j] == keys[i]) ++j;
      entries.push_back({static_cast<int>(keys[i] / r), static_cast<int>(keys[i] % r), u, j - i});
      i = j;
    }
  }
  return IntersectionTensor(r, std::move(valencies), std::move(transpose), std::move(domain),
                            std::move(codomain), std::move(entries));
}

Parabolic::Parabolic(const Scheme& scheme, std::vector<int> colors) : colors_(std::move(colors)) {
  std::sort(colors_.begin(), colors_.end());
  colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
  const int n = scheme.degree();
  class_of_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    const int id = static_cast<int>(classes_.size());
    classes_.emplace_back();
    for (int b = 0; b < n; ++b)
      if (contains_color(scheme.color(a, b))) {
        if (class_of_[b] >= 0) throw std::invalid_argument("color union is not an equivalence relation");
        class_of_[b] = id;
        classes_.back().push_back(b);
      }
    if (class_of_[a] != id) throw std::invalid_argument("color union is not reflexive");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (contains_color(scheme.color(a, b)) != (class_of_[a] == class_of_[b]))
        throw std::invalid_argument("color union is not an equivalence relation");
}

Parabolic Parabolic::diagonal(const Scheme& scheme) {
  std::vector<int> diag;
  for (int c = 0; c < scheme.rank(); ++c)
    if (scheme.is_diagonal(c)) diag.push_back(c);
  return Parabolic(scheme, std::move(diag));
}

bool Parabolic::contains_color(int c) const { return std::binary_search(colors_.begin(), colors_.end(), c); }

bool Parabolic::is_thin(const Scheme& scheme) const {
  return std::all_of(colors_.begin(), colors_.end(), [&](int c) { return scheme.valency(c) == 1; });
}

int ThinRadical::element_of(int color) const {
  auto it = std::lower_bound(colors.begin(), colors.end(), color);
  return it != colors.end() && *it == color ? static_cast<int>(it - colors.begin()) : -1;
}

int compose_thin(const IntersectionTensor& tensor, int s, int t) {
  auto prod = tensor.products(s, t);
  if (prod.size() != 1) throw std::invalid_argument("composition is not a single color; is one factor thin?");
  return prod.front().u;
}

ThinRadical thin_radical(const Scheme& scheme, const IntersectionTensor& tensor) {
  if (!scheme.is_association_scheme()) throw std::invalid_argument("thin radical needs an association scheme");
  std::vector<int> thin;
  for (int c = 0; c < scheme.rank(); ++c)
    if (scheme.valency(c) == 1) thin.push_back(c);
  const int k = static_cast<int>(thin.size());
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int u = compose_thin(tensor, thin[i], thin[j]);
      table[i * k + j] = static_cast<int>(std::lower_bound(thin.begin(), thin.end(), u) - thin.begin());
    }
  auto group = std::make_shared<const GroupTable>(k, std::move(table), "thin radical");
  Parabolic closure(scheme, thin);
  return ThinRadical{std::move(thin), std::move(group), std::move(closure)};
}

Scheme quotient_scheme(const Scheme& scheme, const Parabolic& parabolic) {
  if (parabolic.degree() != scheme.degree()) throw std::invalid_argument("parabolic has the wrong degree");
  const auto& classes = parabolic.classes();
  const int m = parabolic.num_classes();
  std::map<std::vector<int>, int> ids;
  std::vector<int> colors(static_cast<std::size_t>(m) * m);
  std::vector<int> fine;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      fine.clear();
      for (int a : classes[x])
        for (int b : classes[y]) fine.push_back(scheme.color(a, b));
      std::sort(fine.begin(), fine.end());
      std::vector<int> key;
      for (std::size_t i = 0; i < fine.size();) {
        std::size_t j = i;
        while (j < fine.size() && fine[j] == fine[i]) ++j;
        key.push_back(fine[i]);
        key.push_back(static_cast<int>(j - i));
        i = j;
      }
      auto [it, _] = ids.try_emplace(std::move(key), static_cast<int>(ids.size()));
      colors[x * m + y] = it->second;
    }
  try {
    return Scheme::from_colors(m, std::move(colors));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("quotient is not coherent; argument is not a parabolic");
  }
}

Parabolic radical_of_color(const Scheme& scheme, const IntersectionTensor& tensor, const ThinRadical& radical,
                           int color) {
  std::vector<int> fixing;
  for (int u : radical.colors)
    if (compose_thin(tensor, u, color) == color && compose_thin(tensor, color, u) == color) fixing.push_back(u);
  return Parabolic(scheme, std::move(fixing));
}

namespace {

bool is_elementary_abelian(const GroupTable& g, int prime) {
  if (!g.is_abelian()) return false;
  for (int a = 0; a < g.order(); ++a)
    if (a != g.identity() && g.element_order(a) != prime) return false;
  return true;
}

int integer_sqrt(int n) {
  int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

BPropertiesReport verify_B_properties(const Scheme& scheme) {
  BPropertiesReport out;
  Report& rep = out.report;
  const int n = scheme.degree();
  const int p = integer_sqrt(n / 4);
  const bool shape = n % 4 == 0 && p * p * 4 == n && is_prime(p) && p >= 5;
  rep.add("degree_is_4p^2", shape, std::to_string(n));
  rep.add("association_scheme", scheme.is_association_scheme());
  if (!shape || !scheme.is_association_scheme()) return out;

  const auto tensor = intersection_tensor(scheme);
  rep.add("commutative", tensor.is_commutative());

  // Thin radical and quotient.
  const auto rad = thin_radical(scheme, tensor);
  const int e_size = static_cast<int>(rad.colors.size());
  const bool e_ok = e_size == p * p && is_elementary_abelian(*rad.group, p);
  rep.add("B1.thin_radical_is_CpxCp", e_ok, "|E| = " + std::to_string(e_size));
  bool quotient_ok = false;
  std::string qdetail;
  if (rad.closure.num_classes() == 4) {
    const auto q = quotient_scheme(scheme, rad.closure);
    bool regular = true;
    for (int c = 0; c < q.rank(); ++c) regular = regular && q.valency(c) == 1;
    if (regular && q.rank() == 4) {
      const auto qt = intersection_tensor(q);
      const auto qrad = thin_radical(q, qt);
      quotient_ok = is_elementary_abelian(*qrad.group, 2);
    }
    qdetail = "quotient rank " + std::to_string(q.rank());
  } else {
    qdetail = std::to_string(rad.closure.num_classes()) + " classes";
  }
  rep.add("B1.quotient_is_regular_C2xC2", quotient_ok, qdetail);

  // The nontrivial symmetric colors.
  std::vector<int> symmetric;
  for (int c = 0; c < scheme.rank(); ++c)
    if (!scheme.is_diagonal(c) && scheme.transpose(c) == c) symmetric.push_back(c);
  const bool three = symmetric.size() == 3;
  rep.add("B2.three_symmetric_colors", three, std::to_string(symmetric.size()) + " symmetric colors");
  if (!three) return out;
  std::copy(symmetric.begin(), symmetric.end(), out.symmetric_colors.begin());

  bool valency_ok = true, radicals_ok = true, meets_ok = true;
  std::array<std::vector<int>, 3> radicals;
  for (int i = 0; i < 3; ++i) {
    const int s = symmetric[i];
    valency_ok = valency_ok && scheme.valency(s) == p;
    const auto e_i = radical_of_color(scheme, tensor, rad, s);
    radicals[i] = e_i.colors();
    std::vector<int> elems;
    for (int c : e_i.colors()) elems.push_back(rad.element_of(c));
    bool subgroup = static_cast<int>(elems.size()) == p;
    if (subgroup) {
      std::sort(elems.begin(), elems.end());
      subgroup = generated_elements(*rad.group, elems) == elems;
    }
    radicals_ok = radicals_ok && subgroup && static_cast<int>(e_i.classes().front().size()) == p;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) meets_ok = meets_ok && intersect_sorted(radicals[i], radicals[j]).size() == 1;
  rep.add("B2.symmetric_valency_p", valency_ok);
  rep.add("B2.radicals_are_order_p_subgroups", radicals_ok);
  rep.add("B2.radicals_meet_trivially", meets_ok);

  // Positivity pattern of products of translates of the symmetric colors.
  std::array<std::vector<int>, 3> translates;
  for (int k = 0; k < 3; ++k) {
    for (int u : rad.colors) translates[k].push_back(compose_thin(tensor, symmetric[k], u));
    std::sort(translates[k].begin(), translates[k].end());
    translates[k].erase(std::unique(translates[k].begin(), translates[k].end()), translates[k].end());
  }
  bool pattern = true;
  long long triples = 0;
  std::vector<int> positive;
  for (int i = 0; i < 3 && pattern; ++i)
    for (int j = 0; j < 3 && pattern; ++j) {
      if (i == j) continue;
      const int k = 3 - i - j;
      for (int ti : translates[i])
        for (int tj : translates[j]) {
          positive.clear();
          for (const auto& e : tensor.products(ti, tj))
            if (e.c > 0) positive.push_back(e.u);
          triples += scheme.rank();
          if (positive != translates[k]) pattern = false;
        }
    }
  rep.add("B3.positivity_pattern", pattern, std::to_string(triples) + " triples");
  return out;
}

std::vector<int> intersect_colorings(const Scheme& a, const Scheme& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("schemes have different degrees");
  std::vector<int> out(a.colors().size());
  const int rb = b.rank();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.colors()[i] * rb + b.colors()[i];
  canonicalize_colors(a.degree(), out);
  return out;
}

Scheme meet_schemes(const Scheme& a, const Scheme& b) {
  const auto raw = intersect_colorings(a, b);
  return wl_stabilize(a.degree(), raw);
}

bool is_fusion(const Scheme& coarse, const Scheme& fine) {
  if (coarse.degree() != fine.degree()) throw std::invalid_argument("schemes have different degrees");
  std::vector<int> image(fine.rank(), -1);
  for (std::size_t i = 0; i < fine.colors().size(); ++i) {
    int& slot = image[fine.colors()[i]];
    if (slot < 0) slot = coarse.colors()[i];
    else if (slot != coarse.colors()[i]) return false;
  }
  return true;
}

}  // namespace ccs
