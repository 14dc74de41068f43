#include <doctest.h>

#include <stdexcept>

#include "splitword/errors.hpp"
#include "splitword/oracles.hpp"
#include "splitword/poset.hpp"
#include "splitword/prn.hpp"
#include "test_util.hpp"

using namespace splitword;
using namespace splitword::testing;

namespace {

Poset chain(int n) {
  std::vector<VertexSet> above(n);
  for (int x = 0; x < n; ++x) above[x] = first_n(n) & ~first_n(x + 1);
  return Poset(n, above);
}

Poset antichain(int n) { return Poset(n, std::vector<VertexSet>(n, 0)); }

Poset b4_poset() {
  const Graph& g = forbidden_graph(Forbidden::B4);
  return poset_from_orientation(*find_transitive_orientation(g));
}

}  // namespace

TEST_CASE("poset construction") {
  const Poset c = poset_from_orientation(Orientation(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(c.less(0, 2));
  CHECK_FALSE(c.less(2, 0));
  CHECK(c.incomparable_pairs().empty());

  const Poset a = poset_from_orientation(Orientation(3));
  CHECK(a.incomparable_pairs() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

  CHECK(b4_poset().size() == 7);
  CHECK(b4_poset().incomparable_pairs().size() == 9);

  CHECK_THROWS_AS(poset_from_orientation(Orientation(3, {{0, 1}, {1, 2}})), NotTransitive);
  CHECK_THROWS_AS(Poset(2, {singleton(0), 0}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(3, {singleton(1), singleton(2), 0}), std::invalid_argument);
}

TEST_CASE("linear extensions and realizers") {
  CHECK(linear_extensions(chain(4)).size() == 1);
  CHECK(linear_extensions(antichain(3)).size() == 6);
  CHECK(linear_extensions(antichain(3)).front() == std::vector<int>{0, 1, 2});
  CHECK(is_realizer(antichain(2), {{0, 1}, {1, 0}}));
  CHECK_FALSE(is_realizer(antichain(2), {{0, 1}}));
  CHECK_FALSE(is_realizer(chain(2), {{1, 0}}));
}

TEST_CASE("dimension examples") {
  CHECK(dimension(chain(3), 3) == 1);
  CHECK(dimension(antichain(2), 3) == 2);
  CHECK(dimension(antichain(1), 3) == 1);
  CHECK(dimension(b4_poset(), 3) == 3);
  const Realizer r = minimum_realizer(b4_poset(), 3);
  CHECK(r.extensions.size() == 3);
  CHECK(is_realizer(b4_poset(), r.extensions));

  CHECK_THROWS_AS(dimension(b4_poset(), 2), CapExceeded);
  CHECK_THROWS_AS(dimension(antichain(10), 3), TooLarge);
}

TEST_CASE("dimension does not depend on the transitive orientation, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (long bits = 0; bits < graph_count(n); ++bits) {
      const Graph g = graph_from_bits(n, bits);
      const auto all = oracle::transitive_orientations(g);
      if (all.empty()) continue;
      const int dim = dimension(poset_from_orientation(all.front()), n);
      for (const Orientation& d : all) REQUIRE(dimension(poset_from_orientation(d), n) == dim);
    }
  }
}

TEST_CASE("prn examples") {
  const PrnResult k5 = prn(complete(5));
  CHECK(k5.value == 1);
  CHECK(k5.kind == CertificateKind::CompleteGraph);
  CHECK(verify_prn_certificate(complete(5), k5));

  const Graph& b4 = forbidden_graph(Forbidden::B4);
  const PrnResult r3 = prn(b4);
  CHECK(r3.value == 3);
  CHECK(r3.kind == CertificateKind::B4Embedding);
  CHECK(r3.b4.map == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(r3.blocks.q1 == Word{6, 2, 4, 1, 0, 3, 5});
  CHECK(r3.blocks.q2 == Word{2, 1, 5, 6, 0, 4, 3});
  CHECK(r3.blocks.q3 == Word{2, 4, 1, 6, 0, 3, 5});
  CHECK(verify_prn_certificate(b4, r3));

  const Graph b4_minus = b4.induced({0, 1, 2, 3, 4, 5});
  const PrnResult r2 = prn(b4_minus);
  CHECK(r2.value == 2);
  CHECK(r2.kind == CertificateKind::TwoPermutationWord);
  CHECK(is_permutation_of(r2.q1, 6));
  CHECK(is_permutation_of(r2.q2, 6));
  Word w = r2.q1;
  w.insert(w.end(), r2.q2.begin(), r2.q2.end());
  CHECK(represents(w, b4_minus));
  CHECK(verify_prn_certificate(b4_minus, r2));

  PrnResult tampered = r2;
  std::swap(tampered.q2[0], tampered.q2[1]);
  if (tampered.q2 != r2.q2) {
    Word t = tampered.q1;
    t.insert(t.end(), tampered.q2.begin(), tampered.q2.end());
    CHECK(verify_prn_certificate(b4_minus, tampered) == represents(t, b4_minus));
  }
  PrnResult wrong = r3;
  wrong.b4.map = {1, 0, 2, 3, 4, 5, 6};
  CHECK_FALSE(verify_prn_certificate(b4, wrong));

  CHECK_THROWS_AS(prn(cycle(4)), NotSplit);
  CHECK_THROWS_AS(prn(forbidden_graph(Forbidden::B3)), NotComparability);
}

TEST_CASE("prn_oracle examples") {
  CHECK(prn_oracle(complete(3), 1));
  CHECK_FALSE(prn_oracle(path(3), 1));
  CHECK(prn_oracle(path(3), 2));
  CHECK_FALSE(prn_oracle(Graph(2), 1));
  CHECK(prn_oracle(Graph(2), 2));
  CHECK_THROWS_AS(prn_oracle(complete(6), 1), TooLarge);
  CHECK_THROWS_AS(prn_oracle(complete(3), 4), TooLarge);
}

TEST_CASE("prn agrees with the exhaustive oracle and with dimension, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (long bits = 0; bits < graph_count(n); ++bits) {
      const Graph g = graph_from_bits(n, bits);
      const auto sg = try_split_partition(g);
      if (!sg || !find_transitive_orientation(g)) continue;
      const PrnResult r = prn(g);
      REQUIRE(verify_prn_certificate(g, r));
      int k = 1;
      while (!prn_oracle(g, k)) ++k;
      REQUIRE(r.value == k);
      REQUIRE(dimension(poset_from_orientation(*find_transitive_orientation(g)), 3) == k);
    }
  }
}
