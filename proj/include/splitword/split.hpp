#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "splitword/graph.hpp"

namespace splitword {

// A graph together with a clique/independent-set partition. Values
// returned by split_partition and normalize_maximal also satisfy
// maximality: no independent vertex is adjacent to the whole clique.
struct SplitGraph {
  Graph g;
  VertexSet clique = 0;
  VertexSet independent = 0;

  int k() const { return size_of(clique); }
  bool is_valid_partition() const;
  bool is_maximal() const;
};

// Deterministic split partition with a maximal clique; among all valid
// partitions the lexicographically least clique (as a sorted id list)
// is chosen. Throws NotSplit carrying an induced 2K2, C4 or C5.
SplitGraph split_partition(const Graph& g);

std::optional<SplitGraph> try_split_partition(const Graph& g);

// Moves independent vertices adjacent to the whole clique into it,
// smallest id first. Throws InvalidPartition on a malformed input.
SplitGraph normalize_maximal(SplitGraph sg);

// The obstructions to being split, in the order they are reported.
struct NamedGraph {
  std::string name;
  Graph graph;
};
const std::array<NamedGraph, 3>& split_obstructions();

enum class Forbidden { B1 = 0, B2 = 1, B3 = 2, B4 = 3 };

inline constexpr std::array<Forbidden, 4> kAllForbidden{Forbidden::B1, Forbidden::B2,
                                                        Forbidden::B3, Forbidden::B4};
inline constexpr std::array<Forbidden, 3> kNonComparability{Forbidden::B1, Forbidden::B2,
                                                            Forbidden::B3};

std::string to_string(Forbidden f);

// Fixed vertex numbering (clique vertices first):
//   B1  net: triangle {0,1,2}, pendants 3-0, 4-1, 5-2
//   B2  3-sun: triangle {0,1,2}; N(3)={0,1}, N(4)={1,2}, N(5)={0,2}
//   B3  triangle {0,1,2}, pendants 3-0, 4-1; N(5)={0,2}, N(6)={1,2}
//   B4  K4 {0,1,2,3}; N(4)={2,3}, N(5)={1,2}, N(6)={0,3}
const Graph& forbidden_graph(Forbidden f);

struct ForbiddenHit {
  Forbidden member;
  Embedding embedding;
};

// First member of `which`, in B1..B4 order, occurring as an induced subgraph.
std::optional<ForbiddenHit> find_forbidden(const Graph& g, const std::vector<Forbidden>& which);

}  // namespace splitword
