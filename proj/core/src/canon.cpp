#include "circanon/canon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "circanon/refinement.hpp"
#include "circanon/rng.hpp"

namespace circanon {

namespace {

CanonResult success_from_labeling(const Digraph& x, Labeling lambda) {
  CanonResult r;
  r.outcome = CanonOutcome::success;
  r.canonical_form = relabel(x, lambda);
  r.labeling = std::move(lambda);
  return r;
}

CanonResult give_up(const char* reason) {
  CanonResult r;
  r.outcome = CanonOutcome::give_up;
  r.reason = reason;
  return r;
}

Labeling labeling_from_discrete(const Coloring& c) {
  return Labeling(c.colors);
}

// Least color with exactly two members, or {-1, ...} when absent.
struct SizeTwoClass {
  int color = -1;
  int u1 = -1, u2 = -1;
};

SizeTwoClass least_size_two_class(const Coloring& c) {
  std::vector<int> sizes(c.num_classes, 0);
  for (int x = 0; x < c.n; ++x) ++sizes[c.colors[x]];
  SizeTwoClass out;
  for (int color = 0; color < c.num_classes; ++color) {
    if (sizes[color] != 2) continue;
    out.color = color;
    for (int x = 0; x < c.n; ++x) {
      if (c.colors[x] == color) {
        if (out.u1 < 0) {
          out.u1 = x;
        } else {
          out.u2 = x;
        }
      }
    }
    return out;
  }
  return out;
}

// Labeling that sorts vertices by the label pair (first, second).
std::optional<Labeling> labeling_from_pairs(const std::vector<int>& first,
                                            const std::vector<int>& second) {
  const int n = static_cast<int>(first.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](int a, int b) {
    if (first[a] != first[b]) return first[a] < first[b];
    return second[a] < second[b];
  };
  std::sort(order.begin(), order.end(), less);
  for (int i = 1; i < n; ++i) {
    if (!less(order[i - 1], order[i])) return std::nullopt;  // duplicate label
  }
  std::vector<int> lambda(n);
  for (int i = 0; i < n; ++i) lambda[order[i]] = i;
  return Labeling(std::move(lambda));
}

}  // namespace

CanonResult canonize_digraph(const Digraph& x) {
  const int ind[1] = {0};
  const Coloring c = color_refinement(x, ind);
  if (!c.discrete()) return give_up(kReasonNonDiscrete);
  return success_from_labeling(x, labeling_from_discrete(c));
}

CanonResult canonize_graph(const Digraph& x) {
  if (!x.is_symmetric()) {
    throw std::invalid_argument("canonize_graph: adjacency must be symmetric");
  }
  const int ind0[1] = {0};
  const Coloring c = color_refinement(x, ind0);
  const SizeTwoClass cls = least_size_two_class(c);
  if (cls.color < 0) return give_up(kReasonNoSizeTwoClass);

  // Either vertex of the class works (they are swapped by an automorphism of
  // the vertex-0-individualized graph); take the smaller index.
  const int indu[1] = {cls.u1};
  const Coloring c2 = color_refinement(x, indu);
  auto lambda = labeling_from_pairs(c.colors, c2.colors);
  if (!lambda) return give_up(kReasonDuplicateLabels);
  return success_from_labeling(x, std::move(*lambda));
}

CanonResult canonize_full(const Digraph& x) {
  const int n = x.order();
  const bool symmetric = x.is_symmetric();

  std::optional<Digraph> best_form;
  std::optional<Labeling> best_labeling;
  auto offer = [&](Labeling lambda) {
    Digraph form = relabel(x, lambda);
    if (!best_form || form < *best_form) {
      best_form = std::move(form);
      best_labeling = std::move(lambda);
    }
  };

  for (int v = 0; v < n; ++v) {
    const int indv[1] = {v};
    const Coloring c = color_refinement(x, indv);
    if (c.discrete()) {
      offer(labeling_from_discrete(c));
      continue;
    }
    if (!symmetric) continue;
    const SizeTwoClass cls = least_size_two_class(c);
    if (cls.color < 0) continue;
    for (int u : {cls.u1, cls.u2}) {
      const int indu[1] = {u};
      const Coloring c2 = color_refinement(x, indu);
      if (auto lambda = labeling_from_pairs(c.colors, c2.colors)) {
        offer(std::move(*lambda));
      }
    }
  }

  if (!best_form) return give_up(kReasonNoCandidate);
  CanonResult r;
  r.outcome = CanonOutcome::success;
  r.labeling = std::move(*best_labeling);
  r.canonical_form = std::move(*best_form);
  return r;
}

CanonResult naive_canonize(const Digraph& x, std::uint64_t tie_break_seed) {
  if (!x.is_symmetric()) {
    throw std::invalid_argument("naive_canonize: adjacency must be symmetric");
  }
  const int n = x.order();
  Rng rng(tie_break_seed);

  Coloring c = color_refinement(x, {});
  while (!c.discrete()) {
    // Least color whose class is non-singleton.
    std::vector<int> sizes(c.num_classes, 0);
    for (int v = 0; v < n; ++v) ++sizes[c.colors[v]];
    int target = -1;
    for (int color = 0; color < c.num_classes; ++color) {
      if (sizes[color] >= 2) {
        target = color;
        break;
      }
    }
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (c.colors[v] == target) members.push_back(v);
    }
    const int v = members[rng.uniform_below(members.size())];

    // Individualize v on top of the refined coloring and refine again.
    Coloring ind;
    ind.n = n;
    ind.round = 0;
    ind.colors.resize(n);
    for (int u = 0; u < n; ++u) ind.colors[u] = (u == v) ? 0 : c.colors[u] + 1;
    ind.num_classes = c.num_classes + 1;
    ind.stable = false;
    c = refine_to_stable(x, std::move(ind));
  }
  return success_from_labeling(x, labeling_from_discrete(c));
}

}  // namespace circanon
