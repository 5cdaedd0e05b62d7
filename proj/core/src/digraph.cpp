#include "circanon/digraph.hpp"

#include <bit>
#include <stdexcept>

namespace circanon {

Digraph::Digraph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) throw std::invalid_argument("Digraph: order must be positive");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Digraph::set_edge(int u, int v, bool present) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("Digraph::set_edge: vertex out of range");
  }
  if (u == v) throw std::invalid_argument("Digraph::set_edge: loops are not allowed");
  std::uint64_t& w = bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)];
  const std::uint64_t mask = 1ull << (63 - (v & 63));
  if (present) {
    w |= mask;
  } else {
    w &= ~mask;
  }
}

void Digraph::add_edge(int u, int v) {
  set_edge(u, v, true);
  set_edge(v, u, true);
}

int Digraph::out_degree(int u) const {
  int d = 0;
  const std::uint64_t* r = row(u);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

int Digraph::in_degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += edge(u, v) ? 1 : 0;
  return d;
}

int Digraph::arc_count() const {
  int total = 0;
  for (int u = 0; u < n_; ++u) total += out_degree(u);
  return total;
}

bool Digraph::is_symmetric() const {
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (edge(u, v) != edge(v, u)) return false;
    }
  }
  return true;
}

std::vector<int> Digraph::out_neighbors(int u) const {
  std::vector<int> nbrs;
  const std::uint64_t* r = row(u);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bitsw = r[w];
    while (bitsw) {
      const int lead = std::countl_zero(bitsw);
      nbrs.push_back(w * 64 + lead);
      bitsw &= ~(1ull << (63 - lead));
    }
  }
  return nbrs;
}

std::string Digraph::digest() const {
  static const char* hexdig = "0123456789abcdef";
  std::string out;
  out.reserve((static_cast<std::size_t>(n_) * n_ + 3) / 4);
  int nibble = 0;
  int filled = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      nibble = (nibble << 1) | (edge(u, v) ? 1 : 0);
      if (++filled == 4) {
        out.push_back(hexdig[nibble]);
        nibble = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(hexdig[nibble << (4 - filled)]);
  return out;
}

bool operator<(const Digraph& a, const Digraph& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.bits_ < b.bits_;
}

Digraph cayley(const ConnectionSet& s) {
  const int n = s.modulus();
  Digraph g(n);
  for (int x = 0; x < n; ++x) {
    for (int d : s.elements()) g.add_arc(x, (x + d) % n);
  }
  return g;
}

Digraph relabel(const Digraph& x, const Labeling& lambda) {
  const int n = x.order();
  if (lambda.size() != n) throw std::invalid_argument("relabel: size mismatch");
  Digraph y(n);
  for (int u = 0; u < n; ++u) {
    for (int v : x.out_neighbors(u)) y.add_arc(lambda(u), lambda(v));
  }
  return y;
}

bool is_isomorphism(const Digraph& x, const Digraph& y, const Permutation& pi) {
  const int n = x.order();
  if (y.order() != n || pi.size() != n) return false;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (x.edge(u, v) != y.edge(pi(u), pi(v))) return false;
    }
  }
  return true;
}

}  // namespace circanon
