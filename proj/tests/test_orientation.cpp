#include <doctest.h>

#include <random>

#include "splitword/errors.hpp"
#include "splitword/oracles.hpp"
#include "splitword/orientation.hpp"
#include "test_util.hpp"

using namespace splitword;
using namespace splitword::testing;

TEST_CASE("verify_transitive examples") {
  CHECK(verify_transitive(complete(2), Orientation(2, {{0, 1}})));
  const Orientation three_cycle(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(verify_transitive(complete(3), three_cycle));
  // Path 0-2-1 with both ends pointing at the middle.
  const Graph p(3, {{0, 2}, {1, 2}});
  CHECK(verify_transitive(p, Orientation(3, {{0, 2}, {1, 2}})));
  // Wrong edge set.
  CHECK_FALSE(verify_transitive(p, Orientation(3, {{0, 2}})));
  CHECK_FALSE(verify_transitive(p, Orientation(3, {{0, 2}, {1, 2}, {0, 1}})));
}

TEST_CASE("verify_semi_transitive examples") {
  CHECK(verify_semi_transitive(complete(3), Orientation(3, {{0, 1}, {0, 2}, {1, 2}})));
  CHECK_FALSE(verify_semi_transitive(complete(3), Orientation(3, {{0, 1}, {1, 2}, {2, 0}})));
  // C4 a-b-c-d with a->b, b->c, a->d, d->c; no chord a-c.
  const Orientation c4(4, {{0, 1}, {1, 2}, {0, 3}, {3, 2}});
  CHECK(verify_semi_transitive(cycle(4), c4));
  CHECK(oracle::is_semi_transitive(cycle(4), c4));
  CHECK_FALSE(verify_transitive(cycle(4), c4));
  // Shortcut: path 0->1->2->3 with arc 0->3 but no arc 0->2.
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}});
  const Orientation sc(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}});
  CHECK_FALSE(verify_semi_transitive(g, sc));
  CHECK_FALSE(oracle::is_semi_transitive(g, sc));
}

TEST_CASE("find_transitive_orientation examples") {
  const Graph& b4 = forbidden_graph(Forbidden::B4);
  auto d = find_transitive_orientation(b4);
  REQUIRE(d);
  CHECK(verify_transitive(b4, *d));
  CHECK(d->arc_count() == 12);

  CHECK_FALSE(find_transitive_orientation(forbidden_graph(Forbidden::B1)));
  CHECK_FALSE(find_transitive_orientation(cycle(5)));

  auto k3 = find_transitive_orientation(complete(3));
  REQUIRE(k3);
  CHECK(*k3 == Orientation(3, {{0, 1}, {0, 2}, {1, 2}}));

  auto empty = find_transitive_orientation(Graph(3));
  REQUIRE(empty);
  CHECK(empty->arc_count() == 0);
}

TEST_CASE("orientation search agrees with enumeration over all orientations, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (long bits = 0; bits < graph_count(n); ++bits) {
      const Graph g = graph_from_bits(n, bits);
      if (g.edge_count() > 15) continue;
      const auto all = oracle::transitive_orientations(g);
      const auto d = find_transitive_orientation(g);
      REQUIRE(d.has_value() == !all.empty());
      if (d) {
        REQUIRE(verify_transitive(g, *d));
        REQUIRE(verify_semi_transitive(g, *d));
      }
      for (const Orientation& t : all) REQUIRE(verify_semi_transitive(g, t));
    }
  }
}

TEST_CASE("orientation search on denser random graphs, n = 7..9") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 3);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 60) g.add_edge(u, v);
    const auto expect = oracle::is_comparability(g);
    if (!expect) continue;
    const auto d = find_transitive_orientation(g);
    REQUIRE(d.has_value() == *expect);
    if (d) REQUIRE(verify_transitive(g, *d));
  }
}

TEST_CASE("semi-transitivity check agrees with path enumeration") {
  std::mt19937_64 rng(9);
  int accepted = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = graph_from_bits(n, static_cast<long>(rng() % graph_count(n)));
    Orientation d(n);
    for (auto [u, v] : g.edges()) (rng() & 1) ? d.add_arc(u, v) : d.add_arc(v, u);
    const bool expect = is_acyclic(d) && oracle::is_semi_transitive(g, d);
    REQUIRE(verify_semi_transitive(g, d) == expect);
    accepted += expect;
  }
  CHECK(accepted > 0);
}

TEST_CASE("clique_order examples") {
  SplitGraph k3{complete(3), from_vector({0, 1, 2}), 0};
  CHECK(clique_order(k3, Orientation(3, {{0, 1}, {0, 2}, {1, 2}})) == std::vector<int>{0, 1, 2});
  CHECK(clique_order(k3, Orientation(3, {{2, 1}, {2, 0}, {1, 0}})) == std::vector<int>{2, 1, 0});
  CHECK_THROWS_AS(clique_order(k3, Orientation(3, {{0, 1}, {1, 2}, {2, 0}})), NotTransitive);

  const Graph& b4g = forbidden_graph(Forbidden::B4);
  SplitGraph b4 = split_partition(b4g);
  const auto d = find_transitive_orientation(b4g);
  REQUIRE(d);
  const auto order = clique_order(b4, *d);
  REQUIRE(order.size() == 4);
  CHECK(from_vector(order) == b4.clique);
  for (size_t i = 0; i + 1 < order.size(); ++i) CHECK(d->has_arc(order[i], order[i + 1]));

  SplitGraph single{Graph(2), singleton(1), singleton(0)};
  CHECK(clique_order(single, Orientation(2)) == std::vector<int>{1});
}
