#pragma once

#include <string>
#include <vector>

namespace circanon {

/// Connection set S of a circulant: a subset of {1..n-1} seen as Z_n \ {0}.
/// Elements are kept sorted ascending. The set is inverse-closed when
/// s in S implies n-s in S; exactly those sets generate undirected graphs.
class ConnectionSet {
 public:
  ConnectionSet(int n, std::vector<int> elements);

  int modulus() const { return n_; }
  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(int s) const;
  bool inverse_closed() const;

  ConnectionSet negated() const;          // -S
  ConnectionSet multiplied(int k) const;  // kS, requires gcd(k, n) = 1

  /// Text form "<n>: s1,s2,...,sk" with ascending elements.
  std::string to_string() const;

  friend bool operator==(const ConnectionSet& a, const ConnectionSet& b) = default;
  friend bool operator<(const ConnectionSet& a, const ConnectionSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.elements_ < b.elements_;
  }

 private:
  int n_;
  std::vector<int> elements_;
};

}  // namespace circanon
