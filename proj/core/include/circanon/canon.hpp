#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "circanon/digraph.hpp"
#include "circanon/permutation.hpp"

namespace circanon {

enum class CanonOutcome { success, give_up };

/// Result of a canonization attempt. On success the canonical form equals
/// relabel(input, labeling); on give-up the reason carries a stable
/// machine-readable tag so failure statistics stay attributable.
struct CanonResult {
  CanonOutcome outcome = CanonOutcome::give_up;
  std::optional<Labeling> labeling;
  std::optional<Digraph> canonical_form;
  std::string reason;

  bool ok() const { return outcome == CanonOutcome::success; }
};

/// Give-up reason tags.
inline constexpr const char* kReasonNonDiscrete = "non-discrete-coloring";
inline constexpr const char* kReasonNoSizeTwoClass = "no-size-two-class";
inline constexpr const char* kReasonDuplicateLabels = "duplicate-labels";
inline constexpr const char* kReasonNoCandidate = "no-candidate-labeling";
inline constexpr const char* kReasonNoCycleClass = "no-cycle-class";
inline constexpr const char* kReasonCycleNotAutomorphism = "cycle-not-automorphism";

/// Individualize vertex 0 and run color refinement; succeed iff the stable
/// coloring is discrete, in which case the color order is the labeling.
/// Canonical on circulant digraphs (vertex-transitivity makes the fixed
/// choice of vertex 0 lossless); use canonize_full for arbitrary inputs.
CanonResult canonize_digraph(const Digraph& x);

/// The six-step labeling algorithm for circulant graphs: refine with vertex 0
/// individualized, locate the least color class of size exactly two,
/// individualize one of its vertices, refine again, and label each vertex by
/// the pair of colors; gives up when no size-two class exists or labels
/// collide. Requires symmetric adjacency.
CanonResult canonize_graph(const Digraph& x);

/// Canonical on all inputs that yield at least one candidate labeling: the
/// one-vertex (digraph) or two-pass (graph) procedure is run for every
/// individualization choice and the candidate minimizing the adjacency
/// matrix lexicographically wins.
CanonResult canonize_full(const Digraph& x);

/// Repeated refinement with one arbitrary individualization per round,
/// always in the least-colored non-singleton class; the arbitrary choice is
/// driven by the tie-break seed. Always outputs a labeling; whether the
/// canonical form is seed-independent is a property of the input class.
/// Requires symmetric adjacency.
CanonResult naive_canonize(const Digraph& x, std::uint64_t tie_break_seed);

}  // namespace circanon
