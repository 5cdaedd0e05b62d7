#include "circanon/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace circanon {

namespace {

void check_bijective(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("Permutation: image list is not a bijection");
    }
    seen[v] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  check_bijective(images_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::rotation(int n, int a) {
  a = ((a % n) + n) % n;
  std::vector<int> im(n);
  for (int x = 0; x < n; ++x) im[x] = (x + a) % n;
  return Permutation(std::move(im));
}

Permutation Permutation::negation(int n) {
  std::vector<int> im(n);
  for (int x = 0; x < n; ++x) im[x] = (n - x) % n;
  return Permutation(std::move(im));
}

Permutation Permutation::multiplier(int n, int k) {
  k = ((k % n) + n) % n;
  if (std::gcd(k, n) != 1) {
    throw std::invalid_argument("Permutation::multiplier: k must be a unit mod n");
  }
  std::vector<int> im(n);
  for (int x = 0; x < n; ++x) im[x] = static_cast<int>((static_cast<long long>(k) * x) % n);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int x = 0; x < size(); ++x) im[images_[x]] = x;
  return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& g) const {
  if (g.size() != size()) {
    throw std::invalid_argument("Permutation::then: size mismatch");
  }
  std::vector<int> im(images_.size());
  for (int x = 0; x < size(); ++x) im[x] = g.images_[images_[x]];
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

bool Permutation::is_full_cycle() const {
  const int n = size();
  if (n == 0) return false;
  int x = 0;
  for (int step = 0; step < n; ++step) {
    x = images_[x];
    if (x == 0) return step == n - 1;
  }
  return false;
}

}  // namespace circanon
