#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circanon/connection_set.hpp"
#include "circanon/permutation.hpp"

namespace circanon {

/// Dense loopless digraph on {0..n-1}. Row u of the adjacency matrix is the
/// out-neighborhood N(u), bit-packed most-significant-bit first so that
/// word-wise comparison of two graphs equals row-major lexicographic
/// comparison of their adjacency matrices. A graph is a Digraph whose
/// adjacency happens to be symmetric.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int order() const { return n_; }

  bool edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (63 - (v & 63))) & 1u;
  }
  /// Sets or clears the arc (u,v). Loops are rejected.
  void set_edge(int u, int v, bool present = true);
  void add_arc(int u, int v) { set_edge(u, v, true); }
  /// Adds both (u,v) and (v,u).
  void add_edge(int u, int v);

  int out_degree(int u) const;
  int in_degree(int v) const;
  int arc_count() const;
  bool is_symmetric() const;
  std::vector<int> out_neighbors(int u) const;

  const std::uint64_t* row(int u) const {
    return bits_.data() + static_cast<std::size_t>(u) * words_;
  }
  int row_words() const { return words_; }

  /// Hex digest of the row-major adjacency bit string (n*n bits, zero-padded
  /// to a multiple of four bits).
  std::string digest() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  /// Row-major lexicographic order on adjacency matrices of equal order.
  friend bool operator<(const Digraph& a, const Digraph& b);

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Cayley digraph of Z_n: edge (x,y) present exactly when y-x mod n lies in S.
Digraph cayley(const ConnectionSet& s);

/// The relabeled version of x: edge (lambda(u), lambda(v)) present exactly
/// when (u,v) is an edge of x.
Digraph relabel(const Digraph& x, const Labeling& lambda);

/// True iff pi maps x onto y edge-for-edge.
bool is_isomorphism(const Digraph& x, const Digraph& y, const Permutation& pi);

}  // namespace circanon
