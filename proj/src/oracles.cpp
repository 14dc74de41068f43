#include "splitword/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace splitword::oracle {

bool has_induced(const Graph& host, const Graph& pattern) {
  const int p = pattern.order(), n = host.order();
  if (p > n) return false;
  std::vector<int> map(p);
  std::vector<bool> used(n, false);
  auto place = [&](auto&& self, int i) -> bool {
    if (i == p) {
      for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
          if (pattern.adjacent(a, b) != host.adjacent(map[a], map[b])) return false;
      return true;
    }
    for (int h = 0; h < n; ++h) {
      if (used[h]) continue;
      used[h] = true;
      map[i] = h;
      bool hit = self(self, i + 1);
      used[h] = false;
      if (hit) return true;
    }
    return false;
  };
  return place(place, 0);
}

bool is_split(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw std::invalid_argument("split oracle is limited to 20 vertices");
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) {
        const bool cu = (s >> u) & 1, cv = (s >> v) & 1;
        if (cu && cv && !g.adjacent(u, v)) ok = false;
        if (!cu && !cv && g.adjacent(u, v)) ok = false;
      }
    if (ok) return true;
  }
  return false;
}

namespace {

bool transitive(const Graph& g, const std::vector<std::vector<bool>>& arc) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!arc[a][b]) continue;
      for (int c = 0; c < n; ++c)
        if (arc[b][c] && !arc[a][c]) return false;
    }
  return true;
}

// Calls `visit` with each orientation of g's edges; stops when it returns true.
template <typename Visit>
bool each_orientation(const Graph& g, Visit&& visit) {
  const auto edges = g.edges();
  const int n = g.order();
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  std::vector<std::vector<bool>> arc(n, std::vector<bool>(n, false));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (auto& row : arc) std::fill(row.begin(), row.end(), false);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      if ((mask >> e) & 1) arc[v][u] = true;
      else arc[u][v] = true;
    }
    if (visit(arc)) return true;
  }
  return false;
}

Orientation to_orientation(const std::vector<std::vector<bool>>& arc) {
  const int n = static_cast<int>(arc.size());
  Orientation d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (arc[u][v]) d.add_arc(u, v);
  return d;
}

}  // namespace

std::vector<Orientation> transitive_orientations(const Graph& g) {
  if (g.edge_count() > 20) throw std::invalid_argument("orientation oracle is limited to 20 edges");
  std::vector<Orientation> out;
  each_orientation(g, [&](const auto& arc) {
    if (transitive(g, arc)) out.push_back(to_orientation(arc));
    return false;
  });
  return out;
}

std::optional<bool> is_comparability(const Graph& g) {
  if (g.edge_count() <= 15)
    return each_orientation(g, [&](const auto& arc) { return transitive(g, arc); });
  const int n = g.order();
  if (n > 8) return std::nullopt;
  // A transitive orientation is acyclic, so it agrees with one of its own
  // topological orders.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pos(n);
  std::vector<std::vector<bool>> arc(n, std::vector<bool>(n, false));
  do {
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) arc[u][v] = g.adjacent(u, v) && pos[u] < pos[v];
    if (transitive(g, arc)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

bool is_semi_transitive(const Graph& g, const Orientation& d) {
  const int n = g.order();
  if (!d.orients(g)) return false;
  std::vector<int> path;
  std::vector<bool> on_path(n, false);
  bool ok = true;
  // Extends `path`; a repeated vertex is a directed cycle.
  auto walk = [&](auto&& self, int u) -> void {
    if (!ok) return;
    path.push_back(u);
    on_path[u] = true;
    const int len = static_cast<int>(path.size());
    if (len >= 2 && g.adjacent(path.front(), path.back())) {
      for (int i = 0; i < len && ok; ++i)
        for (int j = i + 1; j < len && ok; ++j)
          if (!d.has_arc(path[i], path[j])) ok = false;
    }
    for (int v = 0; v < n && ok; ++v) {
      if (!d.has_arc(u, v)) continue;
      if (on_path[v]) {
        ok = false;
        break;
      }
      self(self, v);
    }
    on_path[u] = false;
    path.pop_back();
  };
  for (int s = 0; s < n && ok; ++s) walk(walk, s);
  return ok;
}

}  // namespace splitword::oracle
