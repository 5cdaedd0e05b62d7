#include "circanon/brute_force.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "circanon/refinement.hpp"

namespace circanon {

namespace {

// Stable-color class sizes, sorted; a cheap isomorphism invariant.
std::vector<int> class_size_profile(const Coloring& c) {
  std::vector<int> sizes(c.num_classes, 0);
  for (int x = 0; x < c.n; ++x) ++sizes[c.colors[x]];
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

struct MappingSearch {
  const Digraph& x;
  const Digraph& y;
  std::vector<int> order;          // assignment order over x's vertices
  std::vector<int> image;          // x vertex -> y vertex or -1
  std::vector<char> used;          // y vertices already taken
  std::vector<int> cx, cy;         // stable refinement colors
  std::function<bool(const std::vector<int>&)> emit;  // false = stop search
  int forced_u = -1, forced_v = -1;

  // Returns false when the search was aborted by emit.
  bool extend(int depth) {
    const int n = x.order();
    if (depth == n) return emit(image);
    const int u = order[depth];
    for (int v = 0; v < n; ++v) {
      if (used[v] || cx[u] != cy[v]) continue;
      if (u == forced_u && v != forced_v) continue;
      bool ok = true;
      for (int d = 0; d < depth; ++d) {
        const int w = order[d];
        if (x.edge(u, w) != y.edge(v, image[w]) || x.edge(w, u) != y.edge(image[w], v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[u] = v;
      used[v] = 1;
      const bool keep_going = extend(depth + 1);
      image[u] = -1;
      used[v] = 0;
      if (!keep_going) return false;
    }
    return true;
  }
};

// Runs the mapping search between x and y (possibly the same graph). The
// emit callback sees every edge-preserving bijection. When forced_u >= 0 only
// bijections taking forced_u to forced_v are visited.
void search_isomorphisms(const Digraph& x, const Digraph& y,
                         std::function<bool(const std::vector<int>&)> emit,
                         int forced_u = -1, int forced_v = -1) {
  const int n = x.order();
  if (y.order() != n || x.arc_count() != y.arc_count()) return;

  const Coloring rx = color_refinement(x, {});
  const Coloring ry = color_refinement(y, {});
  if (class_size_profile(rx) != class_size_profile(ry)) return;

  MappingSearch s{x, y, {}, {}, {}, rx.colors, ry.colors, std::move(emit), forced_u, forced_v};

  // Colors must correspond under any isomorphism only as partitions; align
  // the color names via the class-size profile. When the profiles are equal
  // but the canonical renaming differs the graphs are not isomorphic, since
  // the renaming is itself isomorphism-invariant.
  s.image.assign(n, -1);
  s.used.assign(n, 0);
  s.order.resize(n);
  std::vector<int> sizes(rx.num_classes, 0);
  for (int v = 0; v < n; ++v) ++sizes[rx.colors[v]];
  for (int v = 0; v < n; ++v) s.order[v] = v;
  std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    if ((a == forced_u) != (b == forced_u)) return a == forced_u;
    if (sizes[rx.colors[a]] != sizes[rx.colors[b]]) {
      return sizes[rx.colors[a]] < sizes[rx.colors[b]];
    }
    if (rx.colors[a] != rx.colors[b]) return rx.colors[a] < rx.colors[b];
    return a < b;
  });
  s.extend(0);
}

}  // namespace

std::vector<Permutation> brute_automorphisms(const Digraph& x, int oracle_bound) {
  if (x.order() > oracle_bound) {
    throw std::domain_error("brute_automorphisms: order exceeds the oracle bound");
  }
  std::vector<Permutation> autos;
  search_isomorphisms(x, x, [&](const std::vector<int>& image) {
    autos.emplace_back(image);
    return true;
  });
  std::sort(autos.begin(), autos.end());
  return autos;
}

long long count_automorphisms_capped(const Digraph& x, long long cap) {
  long long count = 0;
  search_isomorphisms(x, x, [&](const std::vector<int>&) {
    ++count;
    return count < cap;
  });
  return count;
}

long long count_stabilizer_capped(const Digraph& x, int fixed_vertex, long long cap) {
  long long count = 0;
  search_isomorphisms(
      x, x,
      [&](const std::vector<int>&) {
        ++count;
        return count < cap;
      },
      fixed_vertex, fixed_vertex);
  return count;
}

std::optional<Permutation> find_isomorphism(const Digraph& x, const Digraph& y) {
  std::optional<Permutation> found;
  search_isomorphisms(x, y, [&](const std::vector<int>& image) {
    found = Permutation(image);
    return false;
  });
  return found;
}

namespace {

struct CanonicalSearch {
  const Digraph& x;
  int n;
  std::vector<int> position_of;  // original vertex -> position, or -1
  std::vector<int> vertex_at;    // position -> original vertex
  std::vector<char> row0;        // adjacency bits of position 0 towards 1..d-1
  Digraph best;
  bool have_best = false;

  void run() {
    position_of.assign(n, -1);
    vertex_at.assign(n, -1);
    row0.assign(n, 0);
    place(0);
  }

  void place(int depth) {
    if (depth == n) {
      Digraph candidate = materialize();
      if (!have_best || candidate < best) {
        best = std::move(candidate);
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (position_of[v] != -1) continue;
      if (depth > 0) {
        row0[depth] = x.edge(vertex_at[0], v) ? 1 : 0;
        // Prune on the only decisive row-major prefix: row 0 up to depth.
        if (have_best) {
          int cmp = 0;
          for (int j = 1; j <= depth; ++j) {
            const int b = best.edge(0, j) ? 1 : 0;
            if (row0[j] != b) {
              cmp = row0[j] - b;
              break;
            }
          }
          if (cmp > 0) continue;
        }
      }
      position_of[v] = depth;
      vertex_at[depth] = v;
      place(depth + 1);
      position_of[v] = -1;
      vertex_at[depth] = -1;
    }
  }

  Digraph materialize() const {
    Digraph g(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && x.edge(vertex_at[i], vertex_at[j])) g.add_arc(i, j);
      }
    }
    return g;
  }
};

}  // namespace

Digraph brute_canonical_form(const Digraph& x, int oracle_bound) {
  if (x.order() > oracle_bound) {
    throw std::domain_error("brute_canonical_form: order exceeds the oracle bound");
  }
  CanonicalSearch search{x, x.order(), {}, {}, {}, Digraph(x.order())};
  search.run();
  return search.best;
}

}  // namespace circanon
