#include "circanon/sampling.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "circanon/cyclotomic.hpp"
#include "circanon/spectral.hpp"

namespace circanon {

ConnectionSet sample_cayley(int n, bool directed, Rng& rng) {
  std::vector<int> elements;
  if (directed) {
    for (int j = 1; j < n; ++j) {
      if (rng.bernoulli()) elements.push_back(j);
    }
  } else {
    for (int j = 1; j <= n / 2; ++j) {
      if (!rng.bernoulli()) continue;
      elements.push_back(j);
      if (j != n - j) elements.push_back(n - j);
    }
  }
  return ConnectionSet(n, std::move(elements));
}

std::vector<int> multiplier_stabilizer(const ConnectionSet& s) {
  const int n = s.modulus();
  std::vector<int> stabilizer;
  for (int k = 1; k < n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    if (s.multiplied(k) == s) stabilizer.push_back(k);
  }
  if (n == 1) stabilizer.push_back(0);  // Z_1^x is trivial; keep K(S) nonempty
  return stabilizer;
}

bool is_multiplier_free(const ConnectionSet& s) {
  const int n = s.modulus();
  const std::vector<int> k = multiplier_stabilizer(s);
  if (s.inverse_closed()) {
    // {1, -1}, which collapses to {1} when n <= 2.
    if (n <= 2) return k.size() == 1;
    return k.size() == 2 && k[0] == 1 && k[1] == n - 1;
  }
  return k.size() == 1 && k[0] == 1;
}

bool is_firm(const ConnectionSet& s, int oracle_bound) {
  const int n = s.modulus();
  if (n > oracle_bound) throw std::domain_error("is_firm: order exceeds the oracle bound");
  const long long target = s.inverse_closed() && n >= 3 ? 2LL * n : n;
  return count_automorphisms_capped(cayley(s), target + 1) == target;
}

namespace {

// All connection sets of the given cardinality; graphs enumerate only
// inverse-closed sets (an isomorphic copy of a symmetric digraph is again
// symmetric, so nothing is missed).
std::vector<ConnectionSet> candidate_sets(int n, int cardinality, bool inverse_closed) {
  std::vector<ConnectionSet> out;
  if (!inverse_closed) {
    std::vector<int> elements;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      if (std::popcount(mask) != cardinality) continue;
      elements.clear();
      for (int j = 1; j < n; ++j) {
        if (mask >> (j - 1) & 1) elements.push_back(j);
      }
      out.emplace_back(n, elements);
    }
    return out;
  }
  const int half = n / 2;
  std::vector<int> elements;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << half); ++mask) {
    elements.clear();
    for (int j = 1; j <= half; ++j) {
      if (!(mask >> (j - 1) & 1)) continue;
      elements.push_back(j);
      if (j != n - j) elements.push_back(n - j);
    }
    if (static_cast<int>(elements.size()) != cardinality) continue;
    out.emplace_back(n, elements);
  }
  return out;
}

// Exact spectrum fingerprint used to pre-filter isomorphism candidates;
// empty when the fast reduction path is unavailable (filter skipped then).
std::vector<std::vector<long long>> spectrum_fingerprint(const ConnectionSet& s) {
  const int n = s.modulus();
  const CycloReducer& red = cyclo_reducer(n);
  std::vector<std::vector<long long>> keys;
  if (!red.fits_int64(n)) return keys;
  keys.reserve(n);
  std::vector<long long> counts(n);
  for (int a = 0; a < n; ++a) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int j : s.elements()) {
      counts[static_cast<int>((static_cast<long long>(a) * j) % n)] += 1;
    }
    keys.push_back(red.reduce_counts(counts));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

int class_size(const ConnectionSet& s, int bound_directed, int bound_undirected) {
  const int n = s.modulus();
  const bool undirected = s.inverse_closed();
  const int bound = undirected ? bound_undirected : bound_directed;
  if (n > bound) throw std::domain_error("class_size: order exceeds the sampler bound");
  if (n > 63) throw std::domain_error("class_size: enumeration domain too large");

  // Multiplier images are always isomorphic; by the phi(n) ceiling the orbit
  // is exhaustive whenever it reaches phi(n) sets.
  std::vector<ConnectionSet> orbit;
  for (int k = 1; k < std::max(n, 2); ++k) {
    if (std::gcd(k, n) != 1) continue;
    orbit.push_back(s.multiplied(k));
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  const int phi = euler_phi(n);
  if (static_cast<int>(orbit.size()) == phi) return phi;

  // Fallback: full enumeration with an isomorphism search, pre-filtered by
  // the exact spectrum.
  const Digraph base = cayley(s);
  const auto base_print = spectrum_fingerprint(s);
  int count = 0;
  for (const ConnectionSet& t : candidate_sets(n, s.size(), undirected)) {
    if (std::binary_search(orbit.begin(), orbit.end(), t)) {
      ++count;
      continue;
    }
    if (!base_print.empty() && spectrum_fingerprint(t) != base_print) continue;
    if (find_isomorphism(base, cayley(t)).has_value()) ++count;
  }
  return count;
}

ExactSampler::ExactSampler(int n, bool directed, int bound_directed, int bound_undirected)
    : n_(n),
      directed_(directed),
      bound_directed_(bound_directed),
      bound_undirected_(bound_undirected) {
  const int bound = directed ? bound_directed : bound_undirected;
  if (n > bound) throw std::domain_error("ExactSampler: order exceeds the sampler bound");
}

int ExactSampler::class_size_of(const ConnectionSet& s) {
  auto it = class_size_cache_.find(s.elements());
  if (it != class_size_cache_.end()) return it->second;
  const int size = class_size(s, bound_directed_, bound_undirected_);
  class_size_cache_.emplace(s.elements(), size);
  return size;
}

long long ExactSampler::aut_order_of(const ConnectionSet& s) {
  auto it = aut_cache_.find(s.elements());
  if (it != aut_cache_.end()) return it->second;
  long long order;
  if (s.size() == 0 || s.size() == n_ - 1) {
    order = 1;  // complete or edgeless: the full symmetric group
    for (int i = 2; i <= n_; ++i) order *= i;
  } else {
    // Cayley graphs are vertex-transitive, so |Aut| = n * |stabilizer of 0|.
    order = static_cast<long long>(n_) *
            count_stabilizer_capped(cayley(s), 0, 1LL << 62);
  }
  aut_cache_.emplace(s.elements(), order);
  return order;
}

ConnectionSet ExactSampler::sample_unlabeled(Rng& rng) {
  while (true) {
    ConnectionSet s = sample_cayley(n_, directed_, rng);
    const int size = class_size_of(s);
    if (rng.uniform_double() * size < 1.0) return s;
  }
}

Digraph ExactSampler::sample_labeled(Rng& rng) {
  while (true) {
    ConnectionSet s = sample_cayley(n_, directed_, rng);
    const long long aut = aut_order_of(s);
    const int size = class_size_of(s);
    const double accept = static_cast<double>(directed_ ? n_ : 2 * n_) /
                          (static_cast<double>(aut) * size);
    if (rng.uniform_double() < accept) {
      return relabel(cayley(s), random_permutation(n_, rng));
    }
  }
}

ConnectionSet sample_unlabeled(const SampleModel& model, Rng& rng) {
  ExactSampler sampler(model.n, model.directed);
  return sampler.sample_unlabeled(rng);
}

Digraph sample_labeled(const SampleModel& model, Rng& rng) {
  ExactSampler sampler(model.n, model.directed);
  return sampler.sample_labeled(rng);
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(im[i], im[j]);
  }
  return Permutation(std::move(im));
}

}  // namespace circanon
