#include <doctest.h>

#include <stdexcept>

#include "splitword/oracles.hpp"
#include "splitword/split.hpp"
#include "splitword/sweep.hpp"
#include "test_util.hpp"

using namespace splitword;
using namespace splitword::testing;

TEST_CASE("exhaustive sweep up to four vertices") {
  SweepOptions opts;
  opts.n_max = 4;
  const SweepSummary s = run_sweep(opts);
  CHECK(s.graphs == 1 + 2 + 8 + 64);
  CHECK(s.failures == 0);
  CHECK(s.prn_histogram[3] == 0);
  CHECK(s.prn_histogram[1] == 4);  // K1..K4
  CHECK(s.prn_histogram[1] + s.prn_histogram[2] == s.comparability);
}

TEST_CASE("sampled sweeps are deterministic and independent of worker count") {
  SweepOptions opts;
  opts.n_max = 7;
  opts.mode = SweepMode::Sample;
  opts.seed = 42;
  opts.count = 400;
  opts.workers = 1;
  const SweepSummary a = run_sweep(opts);
  opts.workers = 3;
  const SweepSummary b = run_sweep(opts);
  CHECK(to_text(a) == to_text(b));
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(a.failures == 0);
  CHECK(a.graphs == 400);
  CHECK(a.prn_histogram[3] >= 1);

  opts.seed = 43;
  CHECK(to_json(run_sweep(opts)).dump() != to_json(a).dump());
}

TEST_CASE("sample sequence") {
  const auto first = sample_graphs(7, 42, 50);
  REQUIRE(first.size() == 50);
  CHECK(first.front() == forbidden_graph(Forbidden::B4));
  CHECK(sample_graphs(7, 42, 50) == first);
  CHECK(sample_graphs(6, 42, 10).front() != forbidden_graph(Forbidden::B4));
  for (const Graph& g : sample_graphs(10, 1, 200)) CHECK(g.order() <= 10);
}

TEST_CASE("constructed graphs are split comparability with bounded clique") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_split_comparability(rng, 8, 5);
    REQUIRE(g.order() <= 8);
    const auto sg = try_split_partition(g);
    REQUIRE(sg);
    REQUIRE(sg->k() <= 5);
    REQUIRE(oracle::is_comparability(g) == true);
  }
}

TEST_CASE("check_graph tallies") {
  SweepSummary t;
  CHECK_FALSE(check_graph(forbidden_graph(Forbidden::B4), t));
  CHECK_FALSE(check_graph(forbidden_graph(Forbidden::B1), t));
  CHECK_FALSE(check_graph(cycle(4), t));
  CHECK(t.graphs == 3);
  CHECK(t.split == 2);
  CHECK(t.comparability == 1);
  CHECK(t.prn_histogram[3] == 1);

  SweepSummary u;
  u.graphs = 2;
  u.prn_histogram[2] = 1;
  t.merge(u);
  CHECK(t.graphs == 5);
  CHECK(t.prn_histogram[2] == 1);
}

TEST_CASE("sweep option limits") {
  SweepOptions opts;
  opts.n_max = 7;
  CHECK_THROWS_AS(run_sweep(opts), std::invalid_argument);
  opts.mode = SweepMode::Sample;
  opts.n_max = 11;
  CHECK_THROWS_AS(run_sweep(opts), std::invalid_argument);
  opts.n_max = 0;
  CHECK_THROWS_AS(run_sweep(opts), std::invalid_argument);
}
