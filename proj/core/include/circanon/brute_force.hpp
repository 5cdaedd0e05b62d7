#pragma once

#include <optional>
#include <vector>

#include "circanon/digraph.hpp"
#include "circanon/permutation.hpp"

namespace circanon {

inline constexpr int kDefaultAutomorphismBound = 12;
inline constexpr int kDefaultCanonicalBound = 10;

/// The full automorphism group, enumerated by backtracking over candidate
/// classes of a color-refinement pass. Throws std::domain_error when the
/// order exceeds the oracle bound.
std::vector<Permutation> brute_automorphisms(const Digraph& x,
                                             int oracle_bound = kDefaultAutomorphismBound);

/// Counts automorphisms, stopping as soon as the count reaches cap. Intended
/// for firmness-style predicates where only "more than k?" matters, so no
/// size bound applies.
long long count_automorphisms_capped(const Digraph& x, long long cap);

/// Counts automorphisms fixing the given vertex, stopping at cap. For a
/// vertex-transitive graph |Aut| = n * stabilizer order, which sidesteps the
/// full enumeration.
long long count_stabilizer_capped(const Digraph& x, int fixed_vertex, long long cap);

/// Some isomorphism from x onto y, or nullopt. Backtracking with refinement
/// pruning; exact but exponential in the worst case.
std::optional<Permutation> find_isomorphism(const Digraph& x, const Digraph& y);

/// Ground-truth canonical form: the lexicographically least adjacency matrix
/// over all relabelings. Throws std::domain_error beyond the oracle bound.
Digraph brute_canonical_form(const Digraph& x, int oracle_bound = kDefaultCanonicalBound);

}  // namespace circanon
