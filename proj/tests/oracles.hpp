#pragma once

// Brute-force reference computations. Each uses only the raw multiplication
// table or color matrix, never the library routine it is compared against.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "ccs/group_table.hpp"
#include "ccs/permutation.hpp"
#include "ccs/scheme.hpp"
#include "ccs/schur_ring.hpp"

namespace oracle {

inline int mul(const ccs::GroupTable& g, int a, int b) { return g.table()[static_cast<std::size_t>(a) * g.order() + b]; }

inline int identity(const ccs::GroupTable& g) {
  for (int e = 0; e < g.order(); ++e) {
    bool ok = true;
    for (int x = 0; x < g.order() && ok; ++x) ok = mul(g, e, x) == x && mul(g, x, e) == x;
    if (ok) return e;
  }
  return -1;
}

inline std::vector<int> center(const ccs::GroupTable& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b) central = mul(g, a, b) == mul(g, b, a);
    if (central) z.push_back(a);
  }
  return z;
}

/// Elements x != 1 with x^2 = 1.
inline int involutions(const ccs::GroupTable& g) {
  const int e = identity(g);
  int k = 0;
  for (int x = 0; x < g.order(); ++x) k += x != e && mul(g, x, x) == e;
  return k;
}

/// Order-p^2 subgroups generated by two elements of p-power order.
inline int sylow_count(const ccs::GroupTable& g, int p) {
  const int e = identity(g);
  std::vector<int> pelts;
  for (int x = 0; x < g.order(); ++x) {
    int y = x, k = 1;
    while (y != e) y = mul(g, y, x), ++k;
    if (k == p || k == p * p) pelts.push_back(x);
  }
  std::set<std::vector<int>> subgroups;
  for (int a : pelts)
    for (int b : pelts) {
      std::set<int> h{e};
      std::vector<int> queue{e};
      for (std::size_t i = 0; i < queue.size() && h.size() <= static_cast<std::size_t>(p * p); ++i)
        for (int s : {a, b}) {
          const int z = mul(g, queue[i], s);
          if (h.insert(z).second) queue.push_back(z);
        }
      if (h.size() == static_cast<std::size_t>(p * p)) subgroups.insert(std::vector<int>(h.begin(), h.end()));
    }
  return static_cast<int>(subgroups.size());
}

/// Automorphisms of an abelian group generated by u and v of order m with
/// <u> x <v> the whole group: pairs (a, b) of images whose induced map
/// k*u + l*v -> k*a + l*b is a well-defined bijection.
inline int abelian_two_generator_automorphisms(const ccs::GroupTable& g, int u, int v, int m) {
  const int e = identity(g);
  auto power = [&](int x, int k) {
    int y = e;
    for (int i = 0; i < k; ++i) y = mul(g, y, x);
    return y;
  };
  int count = 0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      if (power(a, m) != e || power(b, m) != e) continue;
      std::vector<int> image(g.order(), -1);
      bool ok = true;
      std::vector<char> hit(g.order(), 0);
      for (int k = 0; k < m && ok; ++k)
        for (int l = 0; l < m && ok; ++l) {
          const int src = mul(g, power(u, k), power(v, l));
          const int dst = mul(g, power(a, k), power(b, l));
          if (image[src] >= 0) ok = image[src] == dst;
          else if (hit[dst]) ok = false;
          else image[src] = dst, hit[dst] = 1;
        }
      count += ok;
    }
  return count;
}

/// c_{st}^u by counting intermediate points for every pair of every color.
/// Returns false on the first disagreement with `lookup(s, t, u)`.
template <class Lookup>
bool path_counts_agree(const ccs::Scheme& x, Lookup lookup, long long* pairs_checked = nullptr) {
  const int n = x.degree(), r = x.rank();
  std::vector<long long> count(static_cast<std::size_t>(r) * r);
  long long checked = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::fill(count.begin(), count.end(), 0);
      for (int g = 0; g < n; ++g) ++count[static_cast<std::size_t>(x.color(a, g)) * r + x.color(g, b)];
      const int u = x.color(a, b);
      for (int s = 0; s < r; ++s)
        for (int t = 0; t < r; ++t)
          if (count[static_cast<std::size_t>(s) * r + t] != lookup(s, t, u)) return false;
      ++checked;
    }
  if (pairs_checked) *pairs_checked = checked;
  return true;
}

/// All elements of <gens> by closure, as image vectors.
inline std::set<std::vector<int>> closure(int degree, const std::vector<ccs::Permutation>& gens) {
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& g : gens) {
      std::vector<int> y(degree);
      for (int i = 0; i < degree; ++i) y[i] = g[queue[h][i]];
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  return seen;
}

/// Number of pairs (M2, Mp) in GL(2,2) x GL(2,p) whose automorphism of G
/// maps every basic set of `part` onto a basic set.
inline int linear_automorphisms_preserving(const ccs::PaperGroupBundle& b, const ccs::BasicSetPartition& part) {
  const int p = b.p;
  int count = 0;
  for (int m = 0; m < 16; ++m) {
    const std::array<int, 4> m2{m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1};
    if ((m2[0] * m2[3] + m2[1] * m2[2]) % 2 == 0) continue;
    for (int q = 0; q < p * p * p * p; ++q) {
      const std::array<int, 4> mp{q % p, (q / p) % p, (q / p / p) % p, q / p / p / p};
      if (((mp[0] * mp[3] - mp[1] * mp[2]) % p + p) % p == 0) continue;
      const auto f = ccs::linear_automorphism(b, m2, mp);
      bool ok = true;
      for (const auto& s : part.sets()) {
        std::vector<int> t;
        for (int x : s) t.push_back(f[x]);
        std::sort(t.begin(), t.end());
        if (part.index_of(t) < 0) {
          ok = false;
          break;
        }
      }
      count += ok;
    }
  }
  return count;
}

}  // namespace oracle
