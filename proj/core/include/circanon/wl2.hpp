#pragma once

#include <vector>

#include "circanon/brute_force.hpp"
#include "circanon/canon.hpp"
#include "circanon/connection_set.hpp"
#include "circanon/digraph.hpp"
#include "circanon/permutation.hpp"

namespace circanon {

/// Coloring of ordered vertex pairs with canonical contiguous ids. The
/// partition at round i+1 refines round i and stabilizes after at most n^2
/// rounds.
struct PairColoring {
  int n = 0;
  std::vector<int> colors;  // row-major: color of (u,v) at u*n + v
  int round = 0;
  bool stable = false;
  int num_classes = 0;
  std::vector<int> round_class_counts;  // class count after each round, round 0 first

  int color_of(int u, int v) const { return colors[static_cast<std::size_t>(u) * n + v]; }
};

/// 2-WL to stability. Initial color of (u,v) is the ordered type pair
/// (type(uv), type(vu)) over {loop, arc, nonarc}; each round recolors (u,v)
/// by the multiset of (c(uw), c(wv)) over all w, with canonical renaming
/// (classes ordered by predecessor color, then signature). Dense engine:
/// O(n^3 log n) time per round and O(n^3) scratch memory.
PairColoring wl2_stable(const Digraph& x);

/// Partition of V x V into orbits of the automorphism group acting on
/// ordered pairs. Uses the brute-force oracle.
struct OrbitalPartition {
  int n = 0;
  std::vector<int> part_ids;  // row-major
  int num_parts = 0;

  int part_of(int u, int v) const { return part_ids[static_cast<std::size_t>(u) * n + v]; }
};

OrbitalPartition orbital_partition(const Digraph& x,
                                   int oracle_bound = kDefaultAutomorphismBound);

/// True iff the 2-WL stable partition equals the orbital partition as a
/// partition (color names ignored).
bool is_schurian(const Digraph& x, int oracle_bound = kDefaultAutomorphismBound);

/// A stable color class that forms a single cycle through all n vertices:
/// either a directed n-cycle (n pairs, one induced cyclic permutation) or a
/// symmetric undirected n-cycle (2n pairs, two mutually inverse cyclic
/// permutations; the first one sends vertex 0 to its smaller class-neighbor).
struct CycleClass {
  int color = -1;
  bool symmetric = false;
  std::vector<Permutation> cycles;
};

/// All cycle classes of a stable pair coloring, ordered by color id.
std::vector<CycleClass> cycle_classes(const PairColoring& pc);

/// The 2-WL Cayley representation procedure: take the cycle class with the
/// smallest color (matching the input's directedness), enumerate the vertices
/// along it from vertex 0, verify that the cyclic permutation is an
/// automorphism, and output the labeling that writes the input as a literal
/// circulant. Gives up when no cycle class exists or verification fails; on
/// success the output always has circulant adjacency, and the form is
/// labeling-independent on firm circulants.
CanonResult canonical_cayley_representation(const Digraph& x);

/// Number of equivalence classes of Cayley representations of a firm
/// circulant, counted via the full cycles in the brute-force automorphism
/// group (mutually inverse cycles merged in the undirected case). Throws when
/// the oracle bound is exceeded or the input is not firm.
int count_representation_classes(const Digraph& x,
                                 int oracle_bound = kDefaultAutomorphismBound);

/// Every row of the adjacency matrix is the cyclic shift of row 0.
bool has_circulant_adjacency(const Digraph& x);

/// Connection set read off row 0; requires circulant adjacency.
ConnectionSet connection_set_of(const Digraph& x);

}  // namespace circanon
