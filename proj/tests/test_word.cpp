#include <doctest.h>

#include <algorithm>
#include <random>

#include "splitword/errors.hpp"
#include "splitword/sweep.hpp"
#include "splitword/word.hpp"
#include "test_util.hpp"

using namespace splitword;
using namespace splitword::testing;

namespace {

VertexSet letters(const std::string& s) {
  VertexSet out = 0;
  for (char c : s) out |= singleton(c - 'a');
  return out;
}

// Letters a, b, c, ... as vertex ids 0, 1, 2, ...
Word ids(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(c - 'a');
  return w;
}

Word cube(const std::vector<int>& order) {
  Word w;
  for (int i = 0; i < 3; ++i) w.insert(w.end(), order.begin(), order.end());
  return w;
}

}  // namespace

TEST_CASE("restrict examples") {
  const Word w = word_of("acabbccb");
  const std::vector<int> ab{'a', 'b'};
  const std::vector<int> abc{'a', 'b', 'c'};
  CHECK(string_of(restrict(w, ab)) == "aabbb");
  CHECK(restrict(w, std::vector<int>{}).empty());
  CHECK(restrict(w, abc) == w);
  CHECK(restrict(ids("acabbccb"), letters("ab")) == ids("aabbb"));
}

TEST_CASE("alternates examples") {
  CHECK_FALSE(alternates(word_of("acabbccb"), 'a', 'b'));
  CHECK(alternates(word_of("abab"), 'a', 'b'));
  CHECK(alternates(word_of("abab"), 'b', 'a'));
  CHECK_FALSE(alternates(word_of("abba"), 'a', 'b'));
  CHECK(alternates(word_of("xy"), 'x', 'y'));
  CHECK(alternates(word_of("x"), 'x', 'y'));
  CHECK(alternates(word_of(""), 'x', 'y'));
  CHECK(alternates(word_of("acbca"), 'a', 'b'));
}

TEST_CASE("represents examples") {
  CHECK(represents(ids("abcabcabc"), complete(3)));
  CHECK_FALSE(represents(ids("aabb"), complete(2)));
  CHECK(represents(ids("aabb"), Graph(2)));
  try {
    represents(ids("ac"), Graph(4));
    FAIL("missing vertices not reported");
  } catch (const MissingVertex& e) {
    CHECK(e.missing() == std::vector<int>{1, 3});
  }
}

TEST_CASE("uniformity examples") {
  CHECK(uniformity(word_of("123123123")) == 3);
  CHECK_FALSE(uniformity(word_of("aabbb")));
  CHECK(uniformity(word_of("a")) == 1);
  CHECK(uniformity(Word{}) == 0);
  CHECK(is_permutation_of(Word{2, 0, 1}, 3));
  CHECK_FALSE(is_permutation_of(Word{2, 0, 0}, 3));
  CHECK(reversed(Word{1, 2, 3}) == Word{3, 2, 1});
}

TEST_CASE("alternation is symmetric and restriction composes") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 2000; ++trial) {
    const int len = static_cast<int>(rng() % 12);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(static_cast<int>(rng() % 5));
    const int x = static_cast<int>(rng() % 5);
    const int y = (x + 1 + static_cast<int>(rng() % 4)) % 5;
    REQUIRE(alternates(w, x, y) == alternates(w, y, x));
    const VertexSet a = rng() & 31, b = rng() & 31;
    REQUIRE(restrict(w, a & b) == restrict(restrict(w, a), b));
  }
}

TEST_CASE("B4 word reproduces the hand trace") {
  const SplitGraph sg = split_partition(forbidden_graph(Forbidden::B4));
  const CliqueLabelling lab(7, {2, 1, 0, 3});
  const IClassification cls = classify(sg, lab);
  const WordBlocks b = build_word(sg, lab, cls);
  CHECK(b.q1 == Word{6, 2, 4, 1, 0, 3, 5});
  CHECK(b.q2 == Word{2, 1, 5, 6, 0, 4, 3});
  CHECK(b.q3 == Word{2, 4, 1, 6, 0, 3, 5});
  CHECK(compact_digits(sg, lab, b.q1) == "7152346");
  CHECK(compact_digits(sg, lab, b.q2) == "1267354");
  CHECK(compact_digits(sg, lab, b.q3) == "1527346");

  const Word z = b.concatenated();
  CHECK(uniformity(z) == 3);
  CHECK(represents(z, sg.g));
  CHECK(restrict(z, sg.clique) == cube({2, 1, 0, 3}));
  CHECK(join(b.q1) == "6 2 4 1 0 3 5");

  const WordReport report = build_and_verify(sg);
  CHECK(report.all_pass());
  CHECK(report.blocks.q1 == b.q1);
}

TEST_CASE("small words") {
  const WordReport k3 = build_and_verify(split_partition(complete(3)));
  CHECK(k3.all_pass());
  CHECK(compact_digits(split_partition(complete(3)), k3.labelled.labelling, k3.z) == "123123123");

  const WordReport k1 = build_and_verify(split_partition(Graph(1)));
  CHECK(k1.z == Word{0, 0, 0});
  CHECK(k1.all_pass());

  CHECK_THROWS_AS(build_and_verify(split_partition(forbidden_graph(Forbidden::B1))),
                  NotComparability);
  CHECK_THROWS_AS(build_and_verify(split_partition(forbidden_graph(Forbidden::B2))),
                  NotComparability);
}

TEST_CASE("isolated independent vertices are placed as a separate block") {
  // Edge 0-1 plus isolated 2 and 3.
  const SplitGraph sg = split_partition(Graph(4, {{0, 1}}));
  const WordReport r = build_and_verify(sg);
  CHECK(r.labelled.classification.isolated == std::vector<int>{2, 3});
  CHECK(r.blocks.q1 == Word{0, 1, 2, 3});
  CHECK(r.blocks.q2 == Word{3, 2, 0, 1});
  CHECK(r.blocks.q3 == Word{0, 1, 2, 3});
  CHECK(r.all_pass());

  const SplitGraph none = split_partition(Graph(3));
  CHECK(build_and_verify(none).all_pass());
}

TEST_CASE("wrong properties are refused") {
  const SplitGraph sg = split_partition(forbidden_graph(Forbidden::B4));
  const CliqueLabelling lab(7, {2, 1, 0, 3});
  IClassification bad;
  bad.records = {{5, IClass::A2, 3, 5}, {6, IClass::A3, 0, 2}};
  CHECK_THROWS_AS(build_word(sg, lab, bad), PropertiesViolated);
}

TEST_CASE("words represent every split comparability graph, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (long bits = 0; bits < graph_count(n); ++bits) {
      const Graph g = graph_from_bits(n, bits);
      const auto sg = try_split_partition(g);
      if (!sg || !find_labelling(*sg)) continue;
      const WordReport r = build_and_verify(*sg);
      REQUIRE(r.all_pass());
      REQUIRE(is_permutation_of(r.blocks.q1, n));
      REQUIRE(is_permutation_of(r.blocks.q2, n));
      REQUIRE(is_permutation_of(r.blocks.q3, n));
      REQUIRE(restrict(r.z, sg->clique) == cube(r.labelled.labelling.order()));
    }
  }
}

TEST_CASE("processing order of independent vertices does not matter") {
  std::mt19937_64 rng(17);
  std::vector<Graph> graphs{forbidden_graph(Forbidden::B4)};
  for (int i = 0; i < 20; ++i) graphs.push_back(random_split_comparability(rng, 10, 6));
  for (const Graph& g : graphs) {
    const SplitGraph sg = split_partition(g);
    const auto found = find_labelling(sg);
    REQUIRE(found);
    std::vector<int> order;
    for (const IRecord& r : found->classification.records) order.push_back(r.vertex);
    for (int i = 0; i < 200; ++i) {
      std::shuffle(order.begin(), order.end(), rng);
      const WordBlocks b =
          build_word(sg, found->labelling, found->classification, std::span<const int>(order));
      const Word z = b.concatenated();
      REQUIRE(uniformity(z) == 3);
      REQUIRE(represents(z, g));
    }
  }
}
