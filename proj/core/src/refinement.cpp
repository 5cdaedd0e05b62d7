#include "circanon/refinement.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace circanon {

std::vector<std::vector<int>> Coloring::classes() const {
  std::vector<std::vector<int>> out(num_classes);
  for (int x = 0; x < n; ++x) out[colors[x]].push_back(x);
  return out;
}

bool same_partition(const Coloring& a, const Coloring& b) {
  if (a.n != b.n) return false;
  if (a.num_classes != b.num_classes) return false;
  std::vector<int> a_to_b(a.num_classes, -1);
  std::vector<int> b_to_a(b.num_classes, -1);
  for (int x = 0; x < a.n; ++x) {
    const int ca = a.colors[x];
    const int cb = b.colors[x];
    if (a_to_b[ca] == -1) a_to_b[ca] = cb;
    if (b_to_a[cb] == -1) b_to_a[cb] = ca;
    if (a_to_b[ca] != cb || b_to_a[cb] != ca) return false;
  }
  return true;
}

Coloring initial_coloring(const Digraph& g, std::span<const int> individualized) {
  const int n = g.order();
  Coloring c;
  c.n = n;
  c.colors.assign(n, -1);
  int next = 0;
  for (int v : individualized) {
    if (v < 0 || v >= n) throw std::invalid_argument("initial_coloring: vertex out of range");
    if (c.colors[v] != -1) throw std::invalid_argument("initial_coloring: repeated vertex");
    c.colors[v] = next++;
  }
  bool rest = false;
  for (int x = 0; x < n; ++x) {
    if (c.colors[x] == -1) {
      c.colors[x] = next;
      rest = true;
    }
  }
  c.num_classes = next + (rest ? 1 : 0);
  c.round = 0;
  c.stable = c.discrete();
  return c;
}

Coloring refine_round(const Digraph& g, const Coloring& c) {
  const int n = g.order();
  if (c.n != n) throw std::invalid_argument("refine_round: coloring order mismatch");

  std::vector<std::vector<int>> signature(n);
  for (int x = 0; x < n; ++x) {
    auto& sig = signature[x];
    sig.reserve(g.out_degree(x));
    for (int y : g.out_neighbors(x)) sig.push_back(c.colors[y]);
    std::sort(sig.begin(), sig.end());
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto key_less = [&](int a, int b) {
    if (c.colors[a] != c.colors[b]) return c.colors[a] < c.colors[b];
    return signature[a] < signature[b];
  };
  auto key_equal = [&](int a, int b) {
    return c.colors[a] == c.colors[b] && signature[a] == signature[b];
  };
  std::sort(order.begin(), order.end(), key_less);

  Coloring next;
  next.n = n;
  next.colors.assign(n, 0);
  next.round = c.round + 1;
  int id = 0;
  next.colors[order[0]] = 0;
  for (int i = 1; i < n; ++i) {
    if (!key_equal(order[i - 1], order[i])) ++id;
    next.colors[order[i]] = id;
  }
  next.num_classes = id + 1;
  next.stable = (next.num_classes == c.num_classes);
  if (next.stable) {
    // Unchanged partition keeps its ids: each class inherits its old color
    // as the primary sort key.
    next.colors = c.colors;
    next.round = c.round;
  }
  return next;
}

Coloring refine_to_stable(const Digraph& g, Coloring start) {
  Coloring c = std::move(start);
  if (c.discrete()) {
    c.stable = true;
    return c;
  }
  for (int i = 0; i < g.order(); ++i) {
    Coloring next = refine_round(g, c);
    if (next.stable) {
      c.stable = true;
      return c;
    }
    c = std::move(next);
    if (c.discrete()) {
      c.stable = true;
      return c;
    }
  }
  c.stable = true;  // n rounds performed; the partition is provably stable
  return c;
}

Coloring color_refinement(const Digraph& g, std::span<const int> individualized) {
  return refine_to_stable(g, initial_coloring(g, individualized));
}

std::vector<Coloring> round_colorings(const Digraph& g, std::span<const int> individualized) {
  std::vector<Coloring> rounds;
  rounds.push_back(initial_coloring(g, individualized));
  if (rounds.back().discrete()) {
    rounds.back().stable = true;
    return rounds;
  }
  for (int i = 0; i < g.order(); ++i) {
    Coloring next = refine_round(g, rounds.back());
    if (next.stable) {
      rounds.back().stable = true;
      return rounds;
    }
    const bool discrete = next.discrete();
    rounds.push_back(std::move(next));
    if (discrete) {
      rounds.back().stable = true;
      return rounds;
    }
  }
  rounds.back().stable = true;
  return rounds;
}

Coloring stable_partition(const Digraph& g, std::span<const int> individualized) {
  const int n = g.order();
  const Coloring init = initial_coloring(g, individualized);

  std::vector<int> klass = init.colors;
  std::vector<std::vector<int>> members(init.num_classes);
  for (int x = 0; x < n; ++x) members[klass[x]].push_back(x);

  std::deque<int> worklist;
  std::vector<char> queued(init.num_classes, 0);
  for (int c = 0; c < init.num_classes; ++c) {
    worklist.push_back(c);
    queued[c] = 1;
  }

  std::vector<long long> cnt(n, 0);
  std::vector<int> touched_vertices;
  while (!worklist.empty()) {
    const int b = worklist.front();
    worklist.pop_front();
    queued[b] = 0;
    const std::vector<int> splitter = members[b];  // snapshot: b itself may split

    touched_vertices.clear();
    for (int y : splitter) {
      for (int x = 0; x < n; ++x) {
        if (g.edge(x, y)) {
          if (cnt[x] == 0) touched_vertices.push_back(x);
          ++cnt[x];
        }
      }
    }

    // Classes owning a touched vertex may split by count value.
    std::vector<int> touched_classes;
    for (int x : touched_vertices) {
      const int c = klass[x];
      if (members[c].size() > 1) touched_classes.push_back(c);
    }
    std::sort(touched_classes.begin(), touched_classes.end());
    touched_classes.erase(std::unique(touched_classes.begin(), touched_classes.end()),
                          touched_classes.end());

    for (int c : touched_classes) {
      auto& group = members[c];
      std::sort(group.begin(), group.end(),
                [&](int a, int bb) { return cnt[a] < cnt[bb]; });
      // Partition the sorted group into blocks of equal count.
      std::vector<std::pair<std::size_t, std::size_t>> blocks;
      std::size_t start = 0;
      for (std::size_t i = 1; i <= group.size(); ++i) {
        if (i == group.size() || cnt[group[i]] != cnt[group[start]]) {
          blocks.emplace_back(start, i);
          start = i;
        }
      }
      if (blocks.size() == 1) continue;

      std::size_t largest = 0;
      for (std::size_t i = 1; i < blocks.size(); ++i) {
        if (blocks[i].second - blocks[i].first >
            blocks[largest].second - blocks[largest].first) {
          largest = i;
        }
      }
      const bool was_queued = queued[c];
      std::vector<int> original = std::move(group);
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::vector<int> part(original.begin() + blocks[i].first,
                              original.begin() + blocks[i].second);
        int id;
        if (i == largest) {
          id = c;
          members[c] = std::move(part);
        } else {
          id = static_cast<int>(members.size());
          for (int x : part) klass[x] = id;
          members.push_back(std::move(part));
          queued.push_back(0);
        }
        if (was_queued || i != largest) {
          if (!queued[id]) {
            worklist.push_back(id);
            queued[id] = 1;
          }
        }
      }
    }

    for (int x : touched_vertices) cnt[x] = 0;
  }

  Coloring out;
  out.n = n;
  out.round = -1;
  out.stable = true;
  out.colors.assign(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (out.colors[x] != -1) continue;
    for (int y : members[klass[x]]) out.colors[y] = next;
    ++next;
  }
  out.num_classes = next;
  return out;
}

}  // namespace circanon
