#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitword/vertex_set.hpp"

namespace splitword {

using Edge = std::pair<int, int>;

// Undirected simple graph on vertices 0..n-1, at most 64 of them.
// Adjacency is one bitset per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  VertexSet vertices() const { return first_n(order()); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return size_of(adj_[v]); }
  bool adjacent(int u, int v) const { return contains(adj_[u], v); }

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_complete() const;
  bool is_clique(VertexSet s) const;
  bool is_independent(VertexSet s) const;

  // Subgraph induced by `vs`; vertex vs[i] becomes i.
  Graph induced(const std::vector<int>& vs) const;

  void add_edge(int u, int v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

// Injective map from pattern vertices to host vertices; map[i] is the
// image of pattern vertex i.
struct Embedding {
  std::vector<int> map;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

// Checks induced-subgraph semantics of `e` from `pattern` into `host`.
bool is_induced_embedding(const Graph& host, const Graph& pattern,
                          const Embedding& e);

// Lexicographically least induced embedding of `pattern` in `host`.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

Graph complement(const Graph& g);

// Edge-list documents:
//   n=<int>
//   <u>-<v>,<u>-<v>,...      (or "(no edges)")
// A ';' may stand in for the line break, and edge pairs may spread over
// several lines.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

enum class GraphFormat { EdgeList, Graph6 };

// Edge-list documents start with "n="; anything else is read as graph6.
GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text, std::optional<GraphFormat> format = {});

}  // namespace splitword
