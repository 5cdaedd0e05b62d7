#pragma once

#include <span>
#include <vector>

#include "circanon/connection_set.hpp"
#include "circanon/cyclotomic.hpp"
#include "circanon/digraph.hpp"

namespace circanon {

/// Walk matrix to a terminal set T: entry (x, k) counts walks of length k
/// from x that end inside T. Column 0 is the characteristic vector of T and
/// column k+1 is one adjacency application of column k, so counts are exact
/// integers up to (max out-degree)^k.
struct WalkMatrix {
  int n = 0;
  std::vector<int> terminal;
  std::vector<BigInt> entries;  // row-major n*n

  std::span<const BigInt> row(int x) const {
    return {entries.data() + static_cast<std::size_t>(x) * n, static_cast<std::size_t>(n)};
  }
};

WalkMatrix walk_matrix(const Digraph& g, std::span<const int> terminal);

/// W_u of a circulant derived from W_0 by the row shift W_u(x) = W_0(x-u).
/// Only valid for circulant adjacency; use walk_matrix for the general route.
WalkMatrix walk_matrix_shifted(const WalkMatrix& w0, int u);

int distinct_row_count(const WalkMatrix& w);

/// All rows of the walk matrix to {t} pairwise distinct.
bool is_walk_discrete(const Digraph& g, int t);

/// Exactly ceil((n+1)/2) distinct rows in W_0 of cay(Z_n, S), the maximum an
/// undirected circulant allows. Requires inverse-closed S.
bool is_walk_saturated(const ConnectionSet& s);

/// Exact rank over the rationals by fraction-free (Bareiss) elimination.
int walk_rank(const WalkMatrix& w);

}  // namespace circanon
