#pragma once

#include <optional>
#include <vector>

#include "splitword/graph.hpp"
#include "splitword/split.hpp"

namespace splitword {

// A set of arcs over vertices 0..n-1; succ(u) holds every v with u->v.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(int n) : succ_(n, 0) {}
  Orientation(int n, const std::vector<Edge>& arcs);

  int order() const { return static_cast<int>(succ_.size()); }
  VertexSet succ(int u) const { return succ_[u]; }
  VertexSet pred(int v) const;
  bool has_arc(int u, int v) const { return contains(succ_[u], v); }
  void add_arc(int u, int v) { succ_[u] |= singleton(v); }

  std::vector<Edge> arcs() const;
  int arc_count() const;

  // Exactly one direction on every edge of `g`, and no other arcs.
  bool orients(const Graph& g) const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<VertexSet> succ_;
};

// The arc relation is closed under composition and antisymmetric.
bool is_transitive_relation(const Orientation& d);

bool is_acyclic(const Orientation& d);

// True iff `d` orients exactly g's edges and a->b, b->c imply a->c.
bool verify_transitive(const Graph& g, const Orientation& d);

// True iff `d` orients exactly g's edges, is acyclic, and no directed
// path a1->...->ak with an arc a1->ak misses some arc ai->aj (i<j).
bool verify_semi_transitive(const Graph& g, const Orientation& d);

// Backtracking over edges in ascending order (low->high tried first) with
// forced-direction propagation. Empty iff `g` is not a comparability graph.
std::optional<Orientation> find_transitive_orientation(const Graph& g);

// Topological order c1..ck of the clique under a transitive orientation.
// Throws NotTransitive if `d` is not a transitive orientation of sg.g.
std::vector<int> clique_order(const SplitGraph& sg, const Orientation& d);

}  // namespace splitword
