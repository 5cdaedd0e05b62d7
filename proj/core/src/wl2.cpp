#include "circanon/wl2.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace circanon {

namespace {

constexpr int kWl2MaxOrder = 300;  // dense engine needs n^3 scratch words

}  // namespace

PairColoring wl2_stable(const Digraph& x) {
  const int n = x.order();
  if (n > kWl2MaxOrder) {
    throw std::invalid_argument("wl2_stable: order too large for the dense engine");
  }
  const std::size_t pairs = static_cast<std::size_t>(n) * n;

  PairColoring pc;
  pc.n = n;
  pc.colors.assign(pairs, 0);

  // Round 0: ordered type pairs. type: 0 = loop, 1 = arc, 2 = nonarc.
  auto type_of = [&](int u, int v) {
    if (u == v) return 0;
    return x.edge(u, v) ? 1 : 2;
  };
  {
    std::map<std::pair<int, int>, int> ids;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        ids.emplace(std::make_pair(type_of(u, v), type_of(v, u)), 0);
      }
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        pc.colors[static_cast<std::size_t>(u) * n + v] =
            ids[{type_of(u, v), type_of(v, u)}];
      }
    }
    pc.num_classes = next;
  }
  pc.round = 0;
  pc.round_class_counts.push_back(pc.num_classes);
  if (pc.num_classes == static_cast<int>(pairs)) {
    pc.stable = true;
    return pc;
  }

  std::vector<std::int64_t> sig(pairs * n);
  std::vector<std::size_t> order(pairs);
  std::vector<int> next_colors(pairs);

  while (true) {
    const std::int64_t base = pc.num_classes;
    // Signature of (u,v): sorted encodings of (c(uw), c(wv)) over all w.
    for (int u = 0; u < n; ++u) {
      const int* row_u = pc.colors.data() + static_cast<std::size_t>(u) * n;
      for (int v = 0; v < n; ++v) {
        std::int64_t* slot = sig.data() + (static_cast<std::size_t>(u) * n + v) * n;
        for (int w = 0; w < n; ++w) {
          slot[w] = row_u[w] * base + pc.colors[static_cast<std::size_t>(w) * n + v];
        }
        std::sort(slot, slot + n);
      }
    }

    std::iota(order.begin(), order.end(), std::size_t{0});
    auto key_less = [&](std::size_t a, std::size_t b) {
      if (pc.colors[a] != pc.colors[b]) return pc.colors[a] < pc.colors[b];
      return std::lexicographical_compare(sig.data() + a * n, sig.data() + (a + 1) * n,
                                          sig.data() + b * n, sig.data() + (b + 1) * n);
    };
    auto key_equal = [&](std::size_t a, std::size_t b) {
      return pc.colors[a] == pc.colors[b] &&
             std::equal(sig.data() + a * n, sig.data() + (a + 1) * n, sig.data() + b * n);
    };
    std::sort(order.begin(), order.end(), key_less);

    int id = 0;
    next_colors[order[0]] = 0;
    for (std::size_t i = 1; i < pairs; ++i) {
      if (!key_equal(order[i - 1], order[i])) ++id;
      next_colors[order[i]] = id;
    }
    const int count = id + 1;
    if (count == pc.num_classes) {
      // Unchanged partition keeps its ids (classes sort by their own color).
      pc.stable = true;
      return pc;
    }
    pc.colors.swap(next_colors);
    pc.num_classes = count;
    ++pc.round;
    pc.round_class_counts.push_back(count);
    if (count == static_cast<int>(pairs)) {
      pc.stable = true;
      return pc;
    }
  }
}

OrbitalPartition orbital_partition(const Digraph& x, int oracle_bound) {
  const int n = x.order();
  const std::vector<Permutation> autos = brute_automorphisms(x, oracle_bound);

  OrbitalPartition op;
  op.n = n;
  op.part_ids.assign(static_cast<std::size_t>(n) * n, -1);
  int next = 0;
  std::vector<std::pair<int, int>> stack;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (op.part_ids[static_cast<std::size_t>(u) * n + v] != -1) continue;
      op.part_ids[static_cast<std::size_t>(u) * n + v] = next;
      stack.push_back({u, v});
      while (!stack.empty()) {
        const auto [a, b] = stack.back();
        stack.pop_back();
        for (const Permutation& g : autos) {
          const int ga = g(a), gb = g(b);
          int& slot = op.part_ids[static_cast<std::size_t>(ga) * n + gb];
          if (slot == -1) {
            slot = next;
            stack.push_back({ga, gb});
          }
        }
      }
      ++next;
    }
  }
  op.num_parts = next;
  return op;
}

namespace {

bool same_pair_partition(const std::vector<int>& a, int ca, const std::vector<int>& b, int cb) {
  if (a.size() != b.size() || ca != cb) return false;
  std::vector<int> a_to_b(ca, -1), b_to_a(cb, -1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a_to_b[a[i]] == -1) a_to_b[a[i]] = b[i];
    if (b_to_a[b[i]] == -1) b_to_a[b[i]] = a[i];
    if (a_to_b[a[i]] != b[i] || b_to_a[b[i]] != a[i]) return false;
  }
  return true;
}

}  // namespace

bool is_schurian(const Digraph& x, int oracle_bound) {
  const PairColoring pc = wl2_stable(x);
  const OrbitalPartition op = orbital_partition(x, oracle_bound);
  return same_pair_partition(pc.colors, pc.num_classes, op.part_ids, op.num_parts);
}

std::vector<CycleClass> cycle_classes(const PairColoring& pc) {
  const int n = pc.n;
  std::vector<std::vector<std::pair<int, int>>> by_color(pc.num_classes);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      by_color[pc.color_of(u, v)].push_back({u, v});
    }
  }

  std::vector<CycleClass> out;
  std::vector<int> succ(n), outdeg(n), indeg(n);
  std::vector<std::array<int, 2>> nbrs(n);

  for (int color = 0; color < pc.num_classes; ++color) {
    const auto& members = by_color[color];
    bool has_loop = false;
    bool symmetric = true;
    for (const auto& [u, v] : members) {
      if (u == v) has_loop = true;
      if (pc.color_of(v, u) != color) symmetric = false;
    }
    if (has_loop) continue;

    if (!symmetric && static_cast<int>(members.size()) == n) {
      // Directed n-cycle: in/out degree one and a single closed orbit.
      std::fill(outdeg.begin(), outdeg.end(), 0);
      std::fill(indeg.begin(), indeg.end(), 0);
      bool ok = true;
      for (const auto& [u, v] : members) {
        if (++outdeg[u] > 1 || ++indeg[v] > 1) {
          ok = false;
          break;
        }
        succ[u] = v;
      }
      if (!ok) continue;
      int cur = 0;
      for (int step = 0; step < n; ++step) {
        cur = succ[cur];
        if (cur == 0 && step != n - 1) {
          ok = false;
          break;
        }
      }
      if (!ok || cur != 0) continue;
      out.push_back({color, false, {Permutation(succ)}});
      continue;
    }

    if (symmetric && static_cast<int>(members.size()) == 2 * n && n >= 3) {
      // Undirected n-cycle: degree two everywhere and one closed traversal.
      std::fill(outdeg.begin(), outdeg.end(), 0);
      bool ok = true;
      for (const auto& [u, v] : members) {
        if (outdeg[u] >= 2) {
          ok = false;
          break;
        }
        nbrs[u][outdeg[u]++] = v;
      }
      if (!ok) continue;
      for (int v = 0; v < n && ok; ++v) ok = (outdeg[v] == 2);
      if (!ok) continue;

      // Walk from 0 towards its smaller neighbor; this fixes the first
      // direction deterministically.
      std::vector<int> forward(n, -1);
      int prev = 0;
      int cur = std::min(nbrs[0][0], nbrs[0][1]);
      forward[0] = cur;
      int visited = 1;
      while (cur != 0) {
        const int nxt = (nbrs[cur][0] == prev) ? nbrs[cur][1] : nbrs[cur][0];
        forward[cur] = nxt;
        prev = cur;
        cur = nxt;
        if (++visited > n) break;
      }
      if (visited != n) continue;
      Permutation fwd(forward);
      Permutation bwd = fwd.inverse();
      out.push_back({color, true, {std::move(fwd), std::move(bwd)}});
    }
  }
  return out;
}

bool has_circulant_adjacency(const Digraph& x) {
  const int n = x.order();
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (x.edge(i, j) != x.edge(i + 1, (j + 1) % n)) return false;
    }
  }
  return true;
}

ConnectionSet connection_set_of(const Digraph& x) {
  if (!has_circulant_adjacency(x)) {
    throw std::invalid_argument("connection_set_of: adjacency is not circulant");
  }
  return ConnectionSet(x.order(), x.out_neighbors(0));
}

CanonResult canonical_cayley_representation(const Digraph& x) {
  const int n = x.order();
  if (n == 1) {
    CanonResult r;
    r.outcome = CanonOutcome::success;
    r.labeling = Labeling::identity(1);
    r.canonical_form = x;
    return r;
  }

  const bool symmetric = x.is_symmetric();
  const PairColoring pc = wl2_stable(x);
  const std::vector<CycleClass> classes = cycle_classes(pc);

  const CycleClass* chosen = nullptr;
  for (const CycleClass& c : classes) {
    if (c.symmetric == symmetric) {
      chosen = &c;
      break;  // classes are ordered by color; the first one is the least
    }
  }
  CanonResult r;
  if (chosen == nullptr) {
    r.reason = kReasonNoCycleClass;
    return r;
  }

  const Permutation& cycle = chosen->cycles.front();
  if (!is_isomorphism(x, x, cycle)) {
    r.reason = kReasonCycleNotAutomorphism;
    return r;
  }

  // Enumerate along the cycle from vertex 0 and label by position.
  std::vector<int> lambda(n);
  int cur = 0;
  for (int i = 0; i < n; ++i) {
    lambda[cur] = i;
    cur = cycle(cur);
  }
  r.outcome = CanonOutcome::success;
  r.labeling = Labeling(std::move(lambda));
  r.canonical_form = relabel(x, *r.labeling);
  if (!has_circulant_adjacency(*r.canonical_form)) {
    throw std::logic_error("canonical_cayley_representation: verified cycle left a non-circulant form");
  }
  return r;
}

int count_representation_classes(const Digraph& x, int oracle_bound) {
  const int n = x.order();
  const std::vector<Permutation> autos = brute_automorphisms(x, oracle_bound);
  const bool symmetric = x.is_symmetric();
  const std::size_t firm_order = symmetric ? 2 * n : n;
  if (n >= 3 && autos.size() != firm_order) {
    throw std::domain_error("count_representation_classes: input is not firm");
  }
  int full_cycles = 0;
  for (const Permutation& g : autos) {
    if (g.is_full_cycle()) ++full_cycles;
  }
  return symmetric ? full_cycles / 2 : full_cycles;
}

}  // namespace circanon
