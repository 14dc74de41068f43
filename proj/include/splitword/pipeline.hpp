#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "splitword/labelling.hpp"
#include "splitword/prn.hpp"
#include "splitword/split.hpp"
#include "splitword/word.hpp"

namespace splitword {

inline constexpr int kReportSchema = 1;

enum class PipelineStatus { Ok = 0, InternalError = 1, NotSplit = 2, NotComparability = 3 };

struct Certificate {
  std::string name;  // 2K2 / C4 / C5 or B1 / B2 / B3
  Embedding embedding;
};

struct PipelineReport {
  Graph graph;
  PipelineStatus status = PipelineStatus::Ok;
  std::string error;
  std::optional<SplitGraph> split;
  std::optional<Certificate> certificate;
  std::optional<LabelledSplit> labelled;
  std::optional<Orientation> orientation;
  std::optional<WordReport> word;
  std::optional<PrnResult> prn;
  std::vector<std::pair<std::string, bool>> stages;

  int exit_code() const { return static_cast<int>(status); }
};

// Split partition, labelling, orientation from the labelling, the
// three-block word and prn, with each artifact re-verified as it is built.
PipelineReport run_pipeline(const Graph& g);

nlohmann::json to_json(const PipelineReport& report);
nlohmann::json to_json(const PrnResult& r);
nlohmann::json to_json(const IClassification& cls);

// Re-runs every verifier on a serialized report. Returns the names of the
// checks that failed; empty means the report stands.
std::vector<std::string> reverify(const nlohmann::json& report);

}  // namespace splitword
