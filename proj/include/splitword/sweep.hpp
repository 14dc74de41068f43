#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "splitword/graph.hpp"

namespace splitword {

enum class SweepMode { Exhaustive, Sample };

struct SweepOptions {
  int n_max = 4;
  SweepMode mode = SweepMode::Exhaustive;
  std::uint64_t seed = 0;
  int count = 10000;
  int workers = 1;
};

inline constexpr int kMaxExhaustiveVertices = 6;
inline constexpr int kMaxSampleVertices = 10;

struct SweepSummary {
  long graphs = 0;
  long split = 0;
  long comparability = 0;
  std::array<long, 4> prn_histogram{};  // index = prn value
  long failures = 0;
  std::string failure_graph6;
  std::string failure_reason;

  void merge(const SweepSummary& other);
};

// Runs every cross-check on one graph and records it in `tally`. Returns a
// description of the first failed check.
std::optional<std::string> check_graph(const Graph& g, SweepSummary& tally);

// Random split comparability graph built from a random admissible
// labelling, with vertex ids shuffled. Clique size is at most k_max.
Graph random_split_comparability(std::mt19937_64& rng, int n_max, int k_max);

// The sample sequence for a seed: B4 first (when n_max >= 7), then a
// mix of constructed split comparability graphs, random split graphs and
// unconstrained random graphs.
std::vector<Graph> sample_graphs(int n_max, std::uint64_t seed, int count);

// Throws std::invalid_argument on out-of-range options. Stops at the first
// failing graph (lowest index) and reports it.
SweepSummary run_sweep(const SweepOptions& opts);

nlohmann::json to_json(const SweepSummary& s);
std::string to_text(const SweepSummary& s);

// SPLITWORD_WORKERS, else the hardware concurrency.
int default_workers();

}  // namespace splitword
