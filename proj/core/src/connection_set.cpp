#include "circanon/connection_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace circanon {

ConnectionSet::ConnectionSet(int n, std::vector<int> elements)
    : n_(n), elements_(std::move(elements)) {
  if (n_ < 1) throw std::invalid_argument("ConnectionSet: order must be positive");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (int s : elements_) {
    if (s <= 0 || s >= n_) {
      throw std::invalid_argument("ConnectionSet: elements must lie in {1..n-1}");
    }
  }
}

bool ConnectionSet::contains(int s) const {
  return std::binary_search(elements_.begin(), elements_.end(), s);
}

bool ConnectionSet::inverse_closed() const {
  for (int s : elements_) {
    if (!contains(n_ - s)) return false;
  }
  return true;
}

ConnectionSet ConnectionSet::negated() const {
  std::vector<int> neg;
  neg.reserve(elements_.size());
  for (int s : elements_) neg.push_back(n_ - s);
  return ConnectionSet(n_, std::move(neg));
}

ConnectionSet ConnectionSet::multiplied(int k) const {
  k = ((k % n_) + n_) % n_;
  if (std::gcd(k, n_) != 1) {
    throw std::invalid_argument("ConnectionSet::multiplied: k must be a unit mod n");
  }
  std::vector<int> im;
  im.reserve(elements_.size());
  for (int s : elements_) {
    im.push_back(static_cast<int>((static_cast<long long>(k) * s) % n_));
  }
  return ConnectionSet(n_, std::move(im));
}

std::string ConnectionSet::to_string() const {
  std::ostringstream out;
  out << n_ << ':';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    out << (i == 0 ? " " : ",") << elements_[i];
  }
  return out.str();
}

}  // namespace circanon
