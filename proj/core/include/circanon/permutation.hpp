#pragma once

#include <vector>

namespace circanon {

/// Bijection on {0..n-1}. A vertex labeling is the same object: it maps each
/// original vertex to its new name.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation rotation(int n, int a);    // x -> x + a  (mod n)
  static Permutation negation(int n);           // x -> -x     (mod n)
  static Permutation multiplier(int n, int k);  // x -> k*x    (mod n), gcd(k, n) = 1

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// Composition: (f.then(g))(x) == g(f(x)).
  Permutation then(const Permutation& g) const;

  bool is_identity() const;
  /// True iff the permutation is a single cycle through all n points.
  bool is_full_cycle() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<int> images_;
};

using Labeling = Permutation;

}  // namespace circanon
