#include "splitword/split.hpp"

#include <algorithm>
#include <numeric>

#include "splitword/errors.hpp"

namespace splitword {

bool SplitGraph::is_valid_partition() const {
  return (clique & independent) == 0 && (clique | independent) == g.vertices() &&
         g.is_clique(clique) && g.is_independent(independent);
}

bool SplitGraph::is_maximal() const {
  bool ok = true;
  for_each_vertex(independent, [&](int a) {
    if ((g.neighbors(a) & clique) == clique) ok = false;
  });
  return ok;
}

const std::array<NamedGraph, 3>& split_obstructions() {
  static const std::array<NamedGraph, 3> obstructions{{
      {"2K2", Graph(4, {{0, 1}, {2, 3}})},
      {"C4", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})},
      {"C5", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})},
  }};
  return obstructions;
}

namespace {

bool lex_less(VertexSet a, VertexSet b) {
  auto va = to_vector(a), vb = to_vector(b);
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

// Degree-sequence test: with degrees sorted non-increasingly and m the
// largest index with d_m >= m - 1, the graph is split iff
//   sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i,
// and then the first m vertices form a maximum clique.
std::optional<VertexSet> degree_sequence_clique(const Graph& g) {
  const int n = g.order();
  std::vector<int> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(by_degree[i]) >= i) m = i + 1;
  long head = 0, tail = 0;
  for (int i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(by_degree[i]);
  if (head != static_cast<long>(m) * (m - 1) + tail) return std::nullopt;
  VertexSet clique = 0;
  for (int i = 0; i < m; ++i) clique |= singleton(by_degree[i]);
  return clique;
}

}  // namespace

std::optional<SplitGraph> try_split_partition(const Graph& g) {
  auto found = degree_sequence_clique(g);
  if (!found) return std::nullopt;
  SplitGraph sg{g, *found, g.vertices() & ~*found};
  if (!sg.is_valid_partition())
    throw std::logic_error("degree-sequence split partition failed verification");
  sg = normalize_maximal(std::move(sg));

  // Every other maximal partition differs by swapping one independent
  // vertex v in for one clique vertex u.
  VertexSet best = sg.clique;
  for_each_vertex(sg.independent, [&](int v) {
    VertexSet nv = g.neighbors(v) & sg.clique;
    if (size_of(nv) != sg.k() - 1) return;
    int u = std::countr_zero(sg.clique & ~nv);
    VertexSet clique = (sg.clique & ~singleton(u)) | singleton(v);
    SplitGraph alt{g, clique, g.vertices() & ~clique};
    if (alt.is_valid_partition() && alt.is_maximal() && lex_less(clique, best)) best = clique;
  });
  sg.clique = best;
  sg.independent = g.vertices() & ~best;
  return sg;
}

SplitGraph split_partition(const Graph& g) {
  if (auto sg = try_split_partition(g)) return *sg;
  for (const auto& [name, pattern] : split_obstructions()) {
    if (auto e = find_induced(g, pattern)) throw NotSplit(name, *e);
  }
  throw std::logic_error("non-split graph without a 2K2, C4 or C5");
}

SplitGraph normalize_maximal(SplitGraph sg) {
  if (!sg.is_valid_partition()) throw InvalidPartition("not a clique/independent partition");
  for (;;) {
    int mover = -1;
    for_each_vertex(sg.independent, [&](int a) {
      if (mover < 0 && (sg.g.neighbors(a) & sg.clique) == sg.clique) mover = a;
    });
    if (mover < 0) return sg;
    sg.clique |= singleton(mover);
    sg.independent &= ~singleton(mover);
    if (!sg.g.is_independent(sg.independent) || !sg.g.is_clique(sg.clique))
      throw InvalidPartition("partition broken after moving vertex " + std::to_string(mover));
  }
}

std::string to_string(Forbidden f) {
  switch (f) {
    case Forbidden::B1: return "B1";
    case Forbidden::B2: return "B2";
    case Forbidden::B3: return "B3";
    case Forbidden::B4: return "B4";
  }
  return "?";
}

const Graph& forbidden_graph(Forbidden f) {
  static const std::array<Graph, 4> family{
      Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}),
      Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}}),
      Graph(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {0, 5}, {2, 5}, {1, 6}, {2, 6}}),
      Graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 6}, {1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 4},
                {2, 5}, {3, 4}, {3, 6}}),
  };
  return family[static_cast<int>(f)];
}

std::optional<ForbiddenHit> find_forbidden(const Graph& g, const std::vector<Forbidden>& which) {
  for (Forbidden f : kAllForbidden) {
    if (std::find(which.begin(), which.end(), f) == which.end()) continue;
    if (auto e = find_induced(g, forbidden_graph(f))) return ForbiddenHit{f, *e};
  }
  return std::nullopt;
}

}  // namespace splitword
