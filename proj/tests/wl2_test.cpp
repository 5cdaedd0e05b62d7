#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "circanon/canon.hpp"
#include "circanon/sampling.hpp"
#include "circanon/wl2.hpp"
#include "test_util.hpp"

using namespace circanon;
using circanon::testing::all_connection_sets;

namespace {

// Firmness over a raw digraph: |Aut| = n (2n when symmetric), via the capped
// counter so it stays usable beyond the enumeration oracle bound.
bool firm_digraph(const Digraph& x) {
  const long long target = x.is_symmetric() ? 2LL * x.order() : x.order();
  return count_automorphisms_capped(x, target + 1) == target;
}

ConnectionSet random_firm_set(int n, bool directed, Rng& rng) {
  while (true) {
    const ConnectionSet s = sample_cayley(n, directed, rng);
    if (firm_digraph(cayley(s))) return s;
  }
}

}  // namespace

TEST_CASE("wl2 stable partitions of basic graphs") {
  SUBCASE("directed n-cycles stabilize on the difference classes") {
    for (int n : {4, 7, 12}) {
      const PairColoring pc = wl2_stable(cayley(ConnectionSet(n, {1})));
      CHECK(pc.num_classes == n);
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          CHECK(pc.color_of(u, v) == pc.color_of(0, ((v - u) % n + n) % n));
        }
      }
    }
  }
  SUBCASE("K3 has loop and arc classes") {
    CHECK(wl2_stable(cayley(ConnectionSet(3, {1, 2}))).num_classes == 2);
  }
  SUBCASE("edgeless graphs have loop and nonarc classes") {
    for (int n : {2, 5}) {
      CHECK(wl2_stable(Digraph(n)).num_classes == 2);
    }
  }
}

TEST_CASE("wl2 invariance of color multisets") {
  Rng rng(3);
  for (int rep = 0; rep < 4; ++rep) {
    const Digraph g = circanon::testing::random_digraph(8, 0.35, rng);
    const PairColoring base = wl2_stable(g);
    for (int i = 0; i < 20; ++i) {
      const Permutation pi = circanon::random_permutation(8, rng);
      const PairColoring moved = wl2_stable(relabel(g, pi));
      REQUIRE(moved.num_classes == base.num_classes);
      for (int u = 0; u < 8; ++u) {
        for (int v = 0; v < 8; ++v) {
          CHECK(moved.color_of(pi(u), pi(v)) == base.color_of(u, v));
        }
      }
    }
  }
}

TEST_CASE("orbital partitions") {
  CHECK(orbital_partition(cayley(ConnectionSet(5, {1}))).num_parts == 5);
  CHECK(orbital_partition(cayley(ConnectionSet(5, {1, 4}))).num_parts == 3);
  CHECK(orbital_partition(cayley(ConnectionSet(3, {1, 2}))).num_parts == 2);
  CHECK_THROWS_AS(orbital_partition(cayley(ConnectionSet(13, {1}))), std::domain_error);
}

TEST_CASE("orbitals refine the stable pair coloring") {
  Rng rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 5 + static_cast<int>(rng.uniform_below(4));
    const Digraph g = circanon::testing::random_digraph(n, 0.35, rng);
    const PairColoring pc = wl2_stable(g);
    const OrbitalPartition op = orbital_partition(g);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            if (op.part_of(u, v) == op.part_of(a, b)) {
              CHECK(pc.color_of(u, v) == pc.color_of(a, b));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("Schurity on small inputs") {
  for (int n : {4, 6, 9}) {
    CHECK(is_schurian(cayley(ConnectionSet(n, {1}))));
  }
  CHECK(is_schurian(cayley(ConnectionSet(4, {1, 2, 3}))));  // K4
  Rng rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const ConnectionSet s = random_firm_set(8, rep % 2 == 0, rng);
    CHECK(is_schurian(cayley(s)));
  }
}

TEST_CASE("cycle classes") {
  SUBCASE("directed 5-cycle yields the four rotation classes") {
    const auto classes = cycle_classes(wl2_stable(cayley(ConnectionSet(5, {1}))));
    REQUIRE(classes.size() == 4);
    std::set<Permutation> found;
    for (const auto& c : classes) {
      CHECK_FALSE(c.symmetric);
      REQUIRE(c.cycles.size() == 1);
      found.insert(c.cycles[0]);
    }
    for (int a : {1, 2, 3, 4}) CHECK(found.count(Permutation::rotation(5, a)) == 1);
  }
  SUBCASE("undirected 5-cycle yields two symmetric classes with inverse pairs") {
    const auto classes = cycle_classes(wl2_stable(cayley(ConnectionSet(5, {1, 4}))));
    REQUIRE(classes.size() == 2);
    for (const auto& c : classes) {
      CHECK(c.symmetric);
      REQUIRE(c.cycles.size() == 2);
      CHECK(c.cycles[0].inverse() == c.cycles[1]);
      CHECK(c.cycles[0].is_full_cycle());
    }
  }
  SUBCASE("complete graphs: K3 is itself the 3-cycle, K4 and K5 have none") {
    // The arc class of K3 is a symmetric class of 2n = 6 pairs forming a
    // single undirected 3-cycle (K3 = C3), so it qualifies; from K4 on, the
    // arc class has degree n-1 > 2 and nothing qualifies.
    const auto k3 = cycle_classes(wl2_stable(cayley(ConnectionSet(3, {1, 2}))));
    REQUIRE(k3.size() == 1);
    CHECK(k3[0].symmetric);
    CHECK(cycle_classes(wl2_stable(cayley(ConnectionSet(4, {1, 2, 3})))).empty());
    CHECK(cycle_classes(wl2_stable(cayley(ConnectionSet(5, {1, 2, 3, 4})))).empty());
  }
}

TEST_CASE("canonical Cayley representation") {
  SUBCASE("relabelings of the undirected 5-cycle recover S = {1,4}") {
    Rng rng(13);
    const Digraph g = cayley(ConnectionSet(5, {1, 4}));
    for (int rep = 0; rep < 10; ++rep) {
      const CanonResult r =
          canonical_cayley_representation(relabel(g, circanon::random_permutation(5, rng)));
      REQUIRE(r.ok());
      CHECK(has_circulant_adjacency(*r.canonical_form));
      CHECK(connection_set_of(*r.canonical_form) == ConnectionSet(5, {1, 4}));
    }
  }
  SUBCASE("K5 gives up at the cycle-class step") {
    const CanonResult r = canonical_cayley_representation(cayley(ConnectionSet(5, {1, 2, 3, 4})));
    CHECK_FALSE(r.ok());
    CHECK(r.reason == kReasonNoCycleClass);
  }
  SUBCASE("canonical form is invariant across relabelings of firm circulants") {
    Rng rng(17);
    for (const bool directed : {true, false}) {
      const ConnectionSet s = random_firm_set(8, directed, rng);
      const Digraph g = cayley(s);
      const CanonResult base = canonical_cayley_representation(g);
      REQUIRE(base.ok());
      for (int rep = 0; rep < 10; ++rep) {
        const CanonResult moved =
            canonical_cayley_representation(relabel(g, circanon::random_permutation(8, rng)));
        REQUIRE(moved.ok());
        CHECK(*moved.canonical_form == *base.canonical_form);
      }
    }
  }
  SUBCASE("success always produces circulant adjacency") {
    Rng rng(19);
    for (int n : {6, 9, 12}) {
      for (int rep = 0; rep < 10; ++rep) {
        const ConnectionSet s = sample_cayley(n, rep % 2 == 0, rng);
        const Digraph g = relabel(cayley(s), circanon::random_permutation(n, rng));
        const CanonResult r = canonical_cayley_representation(g);
        if (r.ok()) CHECK(has_circulant_adjacency(*r.canonical_form));
      }
    }
  }
}

TEST_CASE("2-WL dominates refinement with one individualization") {
  Rng rng(23);
  for (int n : {8, 15, 24, 30}) {
    for (int rep = 0; rep < 6; ++rep) {
      const ConnectionSet s = sample_cayley(n, true, rng);
      const Digraph g = cayley(s);
      if (canonize_digraph(g).ok()) {
        CHECK(canonical_cayley_representation(g).ok());
      }
    }
  }
}

TEST_CASE("representation class counts") {
  Rng rng(29);
  SUBCASE("directed prime cycle") {
    CHECK(count_representation_classes(cayley(ConnectionSet(5, {1}))) == 4);
  }
  SUBCASE("firm circulants at n = 12 have phi(12) = 4 (digraph) and 2 (graph) classes") {
    const ConnectionSet sd = random_firm_set(12, true, rng);
    CHECK(count_representation_classes(cayley(sd)) == 4);
    const ConnectionSet sg = random_firm_set(12, false, rng);
    CHECK(count_representation_classes(cayley(sg)) == 2);
  }
  SUBCASE("non-firm input is rejected") {
    CHECK_THROWS_AS(count_representation_classes(cayley(ConnectionSet(4, {1, 2, 3}))),
                    std::domain_error);
  }
}
