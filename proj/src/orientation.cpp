#include "splitword/orientation.hpp"

#include <algorithm>

#include "splitword/errors.hpp"

namespace splitword {

Orientation::Orientation(int n, const std::vector<Edge>& arcs) : succ_(n, 0) {
  for (auto [u, v] : arcs) add_arc(u, v);
}

VertexSet Orientation::pred(int v) const {
  VertexSet p = 0;
  for (int u = 0; u < order(); ++u)
    if (has_arc(u, v)) p |= singleton(u);
  return p;
}

std::vector<Edge> Orientation::arcs() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for_each_vertex(succ_[u], [&](int v) { out.emplace_back(u, v); });
  return out;
}

int Orientation::arc_count() const {
  int c = 0;
  for (VertexSet s : succ_) c += size_of(s);
  return c;
}

bool Orientation::orients(const Graph& g) const {
  if (order() != g.order()) return false;
  for (int u = 0; u < order(); ++u) {
    if (contains(succ_[u], u)) return false;
    for (int v = u + 1; v < order(); ++v) {
      const int directions = int(has_arc(u, v)) + int(has_arc(v, u));
      if (directions != (g.adjacent(u, v) ? 1 : 0)) return false;
    }
  }
  return true;
}

bool is_transitive_relation(const Orientation& d) {
  for (int a = 0; a < d.order(); ++a) {
    if (contains(d.succ(a), a)) return false;
    bool ok = true;
    for_each_vertex(d.succ(a), [&](int b) {
      if (d.has_arc(b, a) || (d.succ(b) & ~d.succ(a)) != 0) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_acyclic(const Orientation& d) {
  const int n = d.order();
  std::vector<int> indegree(n, 0);
  for (int u = 0; u < n; ++u) for_each_vertex(d.succ(u), [&](int v) { ++indegree[v]; });
  std::vector<int> ready;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    int u = ready.back();
    ready.pop_back();
    ++seen;
    for_each_vertex(d.succ(u), [&](int v) {
      if (--indegree[v] == 0) ready.push_back(v);
    });
  }
  return seen == n;
}

bool verify_transitive(const Graph& g, const Orientation& d) {
  return d.orients(g) && is_transitive_relation(d);
}

bool verify_semi_transitive(const Graph& g, const Orientation& d) {
  if (!d.orients(g) || !is_acyclic(d)) return false;
  const int n = d.order();

  // Reflexive reachability, filled in reverse topological order.
  std::vector<VertexSet> reach(n, 0);
  std::vector<bool> done(n, false);
  auto fill = [&](auto&& self, int u) -> VertexSet {
    if (done[u]) return reach[u];
    VertexSet r = singleton(u);
    for_each_vertex(d.succ(u), [&](int v) { r |= self(self, v); });
    done[u] = true;
    return reach[u] = r;
  };
  for (int u = 0; u < n; ++u) fill(fill, u);

  // In a DAG, u ~> x ~> y ~> v always concatenates to a simple path, so a
  // shortcut over arc u->v exists iff some such x, y lack the arc x->y.
  for (int u = 0; u < n; ++u) {
    bool ok = true;
    for_each_vertex(d.succ(u), [&](int v) {
      VertexSet between = 0;
      for_each_vertex(reach[u], [&](int x) {
        if (contains(reach[x], v)) between |= singleton(x);
      });
      for_each_vertex(between, [&](int x) {
        VertexSet later = reach[x] & between & ~singleton(x);
        if ((later & ~d.succ(x)) != 0) ok = false;
      });
    });
    if (!ok) return false;
  }
  return true;
}

namespace {

// Partial orientation with forced-direction propagation:
//   a->b and b~c with a!~c forces c->b;   a->b and a~c with b!~c forces a->c;
//   a->b, b->c with a~c forces a->c;       c->a, a->b with c~b forces c->b.
// Any conflict means this branch has no transitive completion.
struct PartialOrientation {
  const Graph* g;
  std::vector<VertexSet> succ, pred;

  bool set(int a, int b) {
    std::vector<Edge> queue{{a, b}};
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      if (contains(succ[u], v)) continue;
      if (contains(succ[v], u)) return false;
      succ[u] |= singleton(v);
      pred[v] |= singleton(u);
      const VertexSet nu = g->neighbors(u), nv = g->neighbors(v);
      for_each_vertex(nv & ~nu & ~singleton(u), [&](int c) { queue.emplace_back(c, v); });
      for_each_vertex(nu & ~nv & ~singleton(v), [&](int c) { queue.emplace_back(u, c); });
      if ((succ[v] & ~nu) != 0 || (pred[u] & ~nv) != 0) return false;
      for_each_vertex(succ[v], [&](int c) { queue.emplace_back(u, c); });
      for_each_vertex(pred[u], [&](int c) { queue.emplace_back(c, v); });
    }
    return true;
  }

  bool oriented(int u, int v) const { return contains(succ[u], v) || contains(succ[v], u); }
};

bool complete(PartialOrientation& state, const std::vector<Edge>& edges, std::size_t next) {
  while (next < edges.size() && state.oriented(edges[next].first, edges[next].second)) ++next;
  if (next == edges.size()) return true;
  auto [u, v] = edges[next];
  for (Edge arc : {Edge{u, v}, Edge{v, u}}) {
    PartialOrientation trial = state;
    if (trial.set(arc.first, arc.second) && complete(trial, edges, next + 1)) {
      state = std::move(trial);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Orientation> find_transitive_orientation(const Graph& g) {
  const int n = g.order();
  PartialOrientation state{&g, std::vector<VertexSet>(n, 0), std::vector<VertexSet>(n, 0)};
  if (!complete(state, g.edges(), 0)) return std::nullopt;
  Orientation d(n);
  for (int u = 0; u < n; ++u) for_each_vertex(state.succ[u], [&](int v) { d.add_arc(u, v); });
  if (!verify_transitive(g, d))
    throw std::logic_error("orientation search produced a non-transitive result");
  return d;
}

std::vector<int> clique_order(const SplitGraph& sg, const Orientation& d) {
  if (!verify_transitive(sg.g, d)) throw NotTransitive("orientation is not transitive");
  std::vector<int> order = to_vector(sg.clique);
  // Within a transitive tournament the in-degrees are 0..k-1.
  auto in_clique = [&](int v) { return size_of(d.pred(v) & sg.clique); };
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return in_clique(a) < in_clique(b); });
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (!d.has_arc(order[i], order[i + 1]))
      throw NotTransitive("clique is not a directed Hamiltonian path");
  return order;
}

}  // namespace splitword
