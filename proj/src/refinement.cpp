#include "refinement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ccs::detail {

PairRefiner::PairRefiner(int n, std::span<const int> src, std::span<const int> dst, long long budget)
    : n_(n), src_(src), dst_(dst), budget_(budget) {
  const auto N = static_cast<std::size_t>(n);
  if (src.size() != N * N || dst.size() != N * N) throw std::invalid_argument("color matrix has wrong size");
}

void PairRefiner::tick() {
  if (++nodes_ > budget_)
    throw SearchBudgetExceeded("search exceeded the node budget of " + std::to_string(budget_));
}

RefinedNode PairRefiner::root() {
  RefinedNode node;
  node.src.resize(n_);
  node.dst.resize(n_);
  std::vector<int> diag;
  for (int v = 0; v < n_; ++v) {
    diag.push_back(src_[static_cast<std::size_t>(v) * n_ + v]);
    diag.push_back(dst_[static_cast<std::size_t>(v) * n_ + v]);
  }
  std::vector<int> values = diag;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  auto id = [&](int c) { return static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin()); };
  for (int v = 0; v < n_; ++v) {
    node.src[v] = id(diag[2 * v]);
    node.dst[v] = id(diag[2 * v + 1]);
  }
  node.cells = static_cast<int>(values.size());
  std::vector<int> a = node.src, b = node.dst;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  node.ok = a == b;
  refine(node);
  return node;
}

RefinedNode PairRefiner::individualize(const RefinedNode& node, int x, int y) {
  RefinedNode child = node;
  if (child.src[x] != child.dst[y]) {
    child.ok = false;
    return child;
  }
  child.src[x] = child.cells;
  child.dst[y] = child.cells;
  ++child.cells;
  refine(child);
  return child;
}

void PairRefiner::refine(RefinedNode& node) {
  if (!node.ok) return;
  const auto N = static_cast<std::size_t>(n_);
  std::vector<std::vector<long long>> sig(2 * N);
  std::vector<long long> keys(N);
  std::vector<int> order(2 * N), fresh(2 * N), count(2 * N);
  for (;;) {
    const long long K = node.cells;
    for (int side = 0; side < 2; ++side) {
      const auto mat = side == 0 ? src_ : dst_;
      const auto& col = side == 0 ? node.src : node.dst;
      for (std::size_t v = 0; v < N; ++v) {
        const int* row = mat.data() + v * N;
        for (std::size_t w = 0; w < N; ++w) keys[w] = row[w] * K + col[w];
        std::sort(keys.begin(), keys.end());
        auto& s = sig[side * N + v];
        s.clear();
        s.push_back(col[v]);
        for (std::size_t i = 0; i < N;) {
          std::size_t j = i;
          while (j < N && keys[j] == keys[i]) ++j;
          s.push_back(keys[i]);
          s.push_back(static_cast<long long>(j - i));
          i = j;
        }
      }
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int ids = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++ids;
      fresh[order[i]] = ids;
    }
    ++ids;
    std::fill(count.begin(), count.begin() + ids, 0);
    for (std::size_t v = 0; v < N; ++v) {
      ++count[fresh[v]];
      --count[fresh[N + v]];
    }
    for (int c = 0; c < ids; ++c)
      if (count[c] != 0) {
        node.ok = false;
        return;
      }
    for (std::size_t v = 0; v < N; ++v) {
      node.src[v] = fresh[v];
      node.dst[v] = fresh[N + v];
    }
    const bool stable = ids == node.cells;
    node.cells = ids;
    if (stable) return;
  }
}

int PairRefiner::target_cell(const RefinedNode& node) const {
  std::vector<int> size(node.cells, 0);
  for (int c : node.src) ++size[c];
  int best = -1;
  for (int c = 0; c < node.cells; ++c)
    if (size[c] > 1 && (best < 0 || size[c] < size[best])) best = c;
  return best;
}

std::vector<int> PairRefiner::cell_points(const std::vector<int>& colors, int cell) const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (colors[v] == cell) out.push_back(v);
  return out;
}

std::optional<Permutation> PairRefiner::leaf_map(const RefinedNode& node) const {
  if (!node.ok || !is_discrete(node)) return std::nullopt;
  std::vector<int> at(n_), images(n_);
  for (int v = 0; v < n_; ++v) at[node.dst[v]] = v;
  for (int v = 0; v < n_; ++v) images[v] = at[node.src[v]];
  const auto N = static_cast<std::size_t>(n_);
  for (std::size_t a = 0; a < N; ++a) {
    const int* row = src_.data() + a * N;
    const int* img = dst_.data() + static_cast<std::size_t>(images[a]) * N;
    for (std::size_t b = 0; b < N; ++b)
      if (row[b] != img[images[b]]) return std::nullopt;
  }
  return Permutation(std::move(images));
}

std::optional<Permutation> PairRefiner::search(const RefinedNode& node) {
  tick();
  if (!node.ok) return std::nullopt;
  if (is_discrete(node)) return leaf_map(node);
  const int cell = target_cell(node);
  const int x = cell_points(node.src, cell).front();
  for (int y : cell_points(node.dst, cell)) {
    auto child = individualize(node, x, y);
    if (auto found = search(child)) return found;
  }
  return std::nullopt;
}

}  // namespace ccs::detail
