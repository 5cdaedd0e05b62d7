#pragma once

#include <span>
#include <vector>

#include "circanon/digraph.hpp"

namespace circanon {

/// Vertex coloring with canonical integer color ids forming a contiguous
/// prefix of the non-negative integers. Refinement only ever splits classes,
/// so the partition at round i+1 refines the one at round i.
struct Coloring {
  int n = 0;
  std::vector<int> colors;
  int round = 0;
  bool stable = false;
  int num_classes = 0;

  bool discrete() const { return num_classes == n; }
  std::vector<std::vector<int>> classes() const;
};

/// True iff a and b induce the same partition (color names ignored).
bool same_partition(const Coloring& a, const Coloring& b);

/// Individualized vertices receive the reserved colors 0,1,... in input
/// order; all remaining vertices share the next color.
Coloring initial_coloring(const Digraph& g, std::span<const int> individualized);

/// One refinement round: new color of x is (old color, multiset of old
/// out-neighbor colors), followed by canonical renaming. Classes are ordered
/// by (predecessor color id, lexicographically sorted multiset signature) and
/// renamed 0,1,2,...; the stable flag is set when the partition is unchanged,
/// in which case the returned color ids equal the input ids.
Coloring refine_round(const Digraph& g, const Coloring& c);

/// Iterates refine_round until stable (at most n rounds are ever needed).
Coloring color_refinement(const Digraph& g, std::span<const int> individualized);

/// The full sequence C_0, C_1, ..., C_stable. The confirming round that
/// merely re-derives an unchanged partition is not appended.
std::vector<Coloring> round_colorings(const Digraph& g, std::span<const int> individualized);

/// Runs refine_round to stability starting from an arbitrary coloring.
Coloring refine_to_stable(const Digraph& g, Coloring start);

/// Worklist engine (smaller-half rule, O(n^2 log n) total) computing the same
/// stable partition as color_refinement. Color ids are deterministic (first
/// occurrence order) but not the canonical round-based names; round is -1.
Coloring stable_partition(const Digraph& g, std::span<const int> individualized);

}  // namespace circanon
