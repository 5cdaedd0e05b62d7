#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "circanon/brute_force.hpp"
#include "circanon/connection_set.hpp"
#include "circanon/digraph.hpp"
#include "circanon/rng.hpp"

namespace circanon {

enum class ModelKind { cayley, unlabeled, labeled };

/// One of the three random-circulant distributions.
struct SampleModel {
  ModelKind kind = ModelKind::cayley;
  bool directed = true;
  int n = 3;
  std::uint64_t seed = 0;
};

inline constexpr int kExactSamplerBoundDirected = 14;
inline constexpr int kExactSamplerBoundUndirected = 18;

/// Uniform connection set: digraphs include every element of {1..n-1}
/// independently with probability 1/2; graphs include every pair {j, n-j}
/// (and the self-paired n/2 for even n) independently with probability 1/2.
ConnectionSet sample_cayley(int n, bool directed, Rng& rng);

/// The multiplier stabilizer K(S) = {k in Z_n^x : kS = S}, a subgroup of the
/// unit group, found by direct check of all phi(n) multipliers.
std::vector<int> multiplier_stabilizer(const ConnectionSet& s);

/// K(S) = {1} for asymmetric sets; K(S) = {1, -1} for inverse-closed sets.
bool is_multiplier_free(const ConnectionSet& s);

/// |Aut(cay(S))| equals n for digraphs and 2n for graphs, decided by a
/// count-capped automorphism search; directedness follows inverse-closure.
bool is_firm(const ConnectionSet& s, int oracle_bound = kDefaultAutomorphismBound);

/// Number of connection sets S' with cay(Z_n, S') isomorphic to cay(Z_n, S).
/// Tries the phi(n) multiplier images first (exhaustive whenever the orbit
/// reaches the phi(n) ceiling) and falls back to full enumeration with the
/// isomorphism-search oracle. Always in [1, phi(n)].
int class_size(const ConnectionSet& s,
               int bound_directed = kExactSamplerBoundDirected,
               int bound_undirected = kExactSamplerBoundUndirected);

/// Exact rejection samplers for the unlabeled and labeled models. Caches
/// class sizes and automorphism counts across draws.
class ExactSampler {
 public:
  ExactSampler(int n, bool directed,
               int bound_directed = kExactSamplerBoundDirected,
               int bound_undirected = kExactSamplerBoundUndirected);

  /// Uniform over isomorphism classes: propose a uniform S and accept with
  /// probability 1/class_size(S).
  ConnectionSet sample_unlabeled(Rng& rng);

  /// Uniform over labeled circulants: propose a uniform S, accept with
  /// probability n/(|Aut| * class_size) (graphs: 2n/(...)), then apply a
  /// uniformly random relabeling.
  Digraph sample_labeled(Rng& rng);

 private:
  int class_size_of(const ConnectionSet& s);
  long long aut_order_of(const ConnectionSet& s);

  int n_;
  bool directed_;
  int bound_directed_;
  int bound_undirected_;
  std::map<std::vector<int>, int> class_size_cache_;
  std::map<std::vector<int>, long long> aut_cache_;
};

ConnectionSet sample_unlabeled(const SampleModel& model, Rng& rng);
Digraph sample_labeled(const SampleModel& model, Rng& rng);

/// Uniformly random permutation of {0..n-1} (Fisher-Yates).
Permutation random_permutation(int n, Rng& rng);

}  // namespace circanon
