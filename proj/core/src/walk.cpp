#include "circanon/walk.hpp"

#include <algorithm>
#include <stdexcept>

namespace circanon {

WalkMatrix walk_matrix(const Digraph& g, std::span<const int> terminal) {
  const int n = g.order();
  WalkMatrix wm;
  wm.n = n;
  wm.terminal.assign(terminal.begin(), terminal.end());
  std::sort(wm.terminal.begin(), wm.terminal.end());
  wm.entries.assign(static_cast<std::size_t>(n) * n, BigInt(0));

  for (int t : wm.terminal) {
    if (t < 0 || t >= n) throw std::invalid_argument("walk_matrix: terminal vertex out of range");
    wm.entries[static_cast<std::size_t>(t) * n] = 1;  // column 0 = chi_T
  }
  std::vector<std::vector<int>> nbrs(n);
  for (int x = 0; x < n; ++x) nbrs[x] = g.out_neighbors(x);

  for (int k = 1; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      BigInt& cell = wm.entries[static_cast<std::size_t>(x) * n + k];
      for (int y : nbrs[x]) cell += wm.entries[static_cast<std::size_t>(y) * n + (k - 1)];
    }
  }
  return wm;
}

WalkMatrix walk_matrix_shifted(const WalkMatrix& w0, int u) {
  const int n = w0.n;
  u = ((u % n) + n) % n;
  WalkMatrix wu;
  wu.n = n;
  for (int t : w0.terminal) wu.terminal.push_back((t + u) % n);
  std::sort(wu.terminal.begin(), wu.terminal.end());
  wu.entries.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    const int src = ((x - u) % n + n) % n;
    for (int k = 0; k < n; ++k) {
      wu.entries[static_cast<std::size_t>(x) * n + k] =
          w0.entries[static_cast<std::size_t>(src) * n + k];
    }
  }
  return wu;
}

int distinct_row_count(const WalkMatrix& w) {
  std::vector<int> order(w.n);
  for (int i = 0; i < w.n; ++i) order[i] = i;
  auto row_less = [&](int a, int b) {
    const auto ra = w.row(a);
    const auto rb = w.row(b);
    for (int k = 0; k < w.n; ++k) {
      const int c = cmp(ra[k], rb[k]);
      if (c != 0) return c < 0;
    }
    return false;
  };
  std::sort(order.begin(), order.end(), row_less);
  int distinct = w.n == 0 ? 0 : 1;
  for (int i = 1; i < w.n; ++i) {
    if (row_less(order[i - 1], order[i])) ++distinct;
  }
  return distinct;
}

bool is_walk_discrete(const Digraph& g, int t) {
  const int terminal[1] = {t};
  const WalkMatrix wm = walk_matrix(g, terminal);
  return distinct_row_count(wm) == g.order();
}

bool is_walk_saturated(const ConnectionSet& s) {
  if (!s.inverse_closed()) {
    throw std::invalid_argument("is_walk_saturated: S must be inverse-closed");
  }
  const int n = s.modulus();
  const int terminal[1] = {0};
  const WalkMatrix wm = walk_matrix(cayley(s), terminal);
  return distinct_row_count(wm) == (n + 2) / 2;
}

int walk_rank(const WalkMatrix& w) {
  const int n = w.n;
  std::vector<BigInt> m = w.entries;
  auto at = [&](int i, int j) -> BigInt& {
    return m[static_cast<std::size_t>(i) * n + j];
  };

  int rank = 0;
  BigInt prev(1);
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i) {
      if (at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = col; j < n; ++j) swap(at(pivot, j), at(rank, j));
    }
    const BigInt p = at(rank, col);
    for (int i = rank + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j) {
        // Fraction-free update; the division by the previous pivot is exact.
        at(i, j) = (at(i, j) * p - at(i, col) * at(rank, j)) / prev;
      }
      at(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace circanon
