#pragma once

#include <vector>

#include "circanon/connection_set.hpp"
#include "circanon/digraph.hpp"
#include "circanon/rng.hpp"

namespace circanon::testing {

inline Digraph random_digraph(int n, double p, Rng& rng) {
  Digraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && rng.uniform_double() < p) g.add_arc(u, v);
    }
  }
  return g;
}

inline Digraph random_graph(int n, double p, Rng& rng) {
  Digraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform_double() < p) g.add_edge(u, v);
    }
  }
  return g;
}

/// Every connection set of order n; inverse-closed sets only when requested.
inline std::vector<ConnectionSet> all_connection_sets(int n, bool inverse_closed_only) {
  std::vector<ConnectionSet> out;
  if (!inverse_closed_only) {
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
      std::vector<int> el;
      for (int j = 1; j < n; ++j) {
        if (mask >> (j - 1) & 1) el.push_back(j);
      }
      out.emplace_back(n, std::move(el));
    }
    return out;
  }
  const int half = n / 2;
  for (unsigned long mask = 0; mask < (1ul << half); ++mask) {
    std::vector<int> el;
    for (int j = 1; j <= half; ++j) {
      if (!(mask >> (j - 1) & 1)) continue;
      el.push_back(j);
      if (j != n - j) el.push_back(n - j);
    }
    out.emplace_back(n, std::move(el));
  }
  return out;
}

/// Independent walk-count oracle: explicit enumeration of all vertex
/// sequences of the given length.
inline long long count_walks_by_enumeration(const Digraph& g, int from,
                                            const std::vector<int>& terminal, int length) {
  if (length == 0) {
    for (int t : terminal) {
      if (t == from) return 1;
    }
    return 0;
  }
  long long total = 0;
  for (int y : g.out_neighbors(from)) {
    total += count_walks_by_enumeration(g, y, terminal, length - 1);
  }
  return total;
}

}  // namespace circanon::testing
