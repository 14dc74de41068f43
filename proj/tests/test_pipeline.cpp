#include <doctest.h>

#include <algorithm>

#include "splitword/pipeline.hpp"
#include "test_util.hpp"

using namespace splitword;
using namespace splitword::testing;

namespace {

bool contains_check(const std::vector<std::string>& failed, const std::string& name) {
  return std::find(failed.begin(), failed.end(), name) != failed.end();
}

}  // namespace

TEST_CASE("B4 report") {
  const PipelineReport r = run_pipeline(forbidden_graph(Forbidden::B4));
  CHECK(r.status == PipelineStatus::Ok);
  CHECK(r.exit_code() == 0);
  REQUIRE(r.prn);
  CHECK(r.prn->value == 3);
  for (const auto& [stage, ok] : r.stages) {
    CAPTURE(stage);
    CHECK(ok);
  }

  const nlohmann::json j = to_json(r);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("status") == "ok");
  CHECK(j.at("input").at("graph6") == "F~Lc_");
  CHECK(j.at("labelling") == std::vector<int>{2, 1, 0, 3});
  CHECK(j.at("word").at("compact") == "715234612673541527346");
  CHECK(j.at("prn").at("value") == 3);
  CHECK(j.at("prn").at("certificate_kind") == "B4Embedding");
  CHECK(reverify(j).empty());
}

TEST_CASE("K3 report") {
  const PipelineReport r = run_pipeline(complete(3));
  CHECK(r.exit_code() == 0);
  const nlohmann::json j = to_json(r);
  CHECK(j.at("word").at("z") == std::vector<int>{0, 1, 2, 0, 1, 2, 0, 1, 2});
  CHECK(j.at("prn").at("value") == 1);
  CHECK(reverify(j).empty());
}

TEST_CASE("failure reports carry certificates") {
  const PipelineReport c4 = run_pipeline(cycle(4));
  CHECK(c4.status == PipelineStatus::NotSplit);
  CHECK(c4.exit_code() == 2);
  REQUIRE(c4.certificate);
  CHECK(c4.certificate->name == "C4");
  CHECK(reverify(to_json(c4)).empty());

  const PipelineReport b1 = run_pipeline(forbidden_graph(Forbidden::B1));
  CHECK(b1.status == PipelineStatus::NotComparability);
  CHECK(b1.exit_code() == 3);
  REQUIRE(b1.certificate);
  CHECK(b1.certificate->name == "B1");
  CHECK(b1.certificate->embedding.map == std::vector<int>{0, 1, 2, 3, 4, 5});
  const nlohmann::json j = to_json(b1);
  CHECK(j.at("status") == "not_comparability");
  CHECK(reverify(j).empty());
}

TEST_CASE("tampered reports are caught") {
  const nlohmann::json good = to_json(run_pipeline(forbidden_graph(Forbidden::B4)));

  nlohmann::json j = good;
  std::swap(j["word"]["q1"][0], j["word"]["q1"][1]);
  CHECK(contains_check(reverify(j), "word_concatenation"));

  j = good;
  j["orientation"][0] = {j["orientation"][0][1], j["orientation"][0][0]};
  CHECK(contains_check(reverify(j), "orientation"));

  j = good;
  j["prn"]["certificate_data"]["embedding"] = {1, 0, 2, 3, 4, 5, 6};
  CHECK(contains_check(reverify(j), "prn"));

  j = good;
  j["input"]["graph6"] = "Bw";
  CHECK(contains_check(reverify(j), "graph6"));

  j = good;
  j["schema"] = 2;
  CHECK(reverify(j) == std::vector<std::string>{"schema"});

  j = good;
  j.erase("word");
  CHECK_FALSE(reverify(j).empty());

  nlohmann::json bad_cert = to_json(run_pipeline(forbidden_graph(Forbidden::B1)));
  bad_cert["certificate"]["embedding"] = {0, 1, 2, 3, 5, 4};
  CHECK(contains_check(reverify(bad_cert), "certificate"));
}

TEST_CASE("every report for n <= 5 re-verifies") {
  for (int n = 1; n <= 5; ++n) {
    for (long bits = 0; bits < graph_count(n); ++bits) {
      const PipelineReport r = run_pipeline(graph_from_bits(n, bits));
      REQUIRE(r.status != PipelineStatus::InternalError);
      REQUIRE(reverify(to_json(r)).empty());
    }
  }
}
