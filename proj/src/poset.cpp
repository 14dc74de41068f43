#include "splitword/poset.hpp"

#include <bitset>
#include <optional>

#include "splitword/errors.hpp"

namespace splitword {

Poset::Poset(int n, std::vector<VertexSet> above) : above_(std::move(above)) {
  if (static_cast<int>(above_.size()) != n) throw std::invalid_argument("poset size mismatch");
  for (int x = 0; x < n; ++x) {
    if (contains(above_[x], x)) throw std::invalid_argument("poset relation is reflexive");
    if ((above_[x] & ~first_n(n)) != 0) throw std::invalid_argument("poset element out of range");
    for_each_vertex(above_[x], [&](int y) {
      if ((above_[y] & ~above_[x]) != 0)
        throw std::invalid_argument("poset relation is not transitive");
    });
  }
}

std::vector<Edge> Poset::incomparable_pairs() const {
  std::vector<Edge> out;
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y)
      if (!comparable(x, y)) out.emplace_back(x, y);
  return out;
}

Poset poset_from_orientation(const Orientation& d) {
  if (!is_transitive_relation(d)) throw NotTransitive("orientation is not transitive");
  std::vector<VertexSet> above(d.order());
  for (int u = 0; u < d.order(); ++u) above[u] = d.succ(u);
  return Poset(d.order(), std::move(above));
}

namespace {

void extend_all(const Poset& p, std::vector<int>& prefix, VertexSet placed,
                std::vector<std::vector<int>>& out) {
  const int n = p.size();
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(prefix);
    return;
  }
  for (int x = 0; x < n; ++x) {
    if (contains(placed, x)) continue;
    bool minimal = true;
    for (int y = 0; y < n && minimal; ++y)
      if (!contains(placed, y) && p.less(y, x)) minimal = false;
    if (!minimal) continue;
    prefix.push_back(x);
    extend_all(p, prefix, placed | singleton(x), out);
    prefix.pop_back();
  }
}

// Smallest-first topological order of a relation given by successor sets;
// empty if it has a cycle.
std::vector<int> topological(int n, const std::vector<VertexSet>& succ) {
  std::vector<VertexSet> pred(n, 0);
  for (int u = 0; u < n; ++u) for_each_vertex(succ[u], [&](int v) { pred[v] |= singleton(u); });
  std::vector<int> order;
  VertexSet placed = 0;
  while (static_cast<int>(order.size()) < n) {
    int next = -1;
    for (int x = 0; x < n && next < 0; ++x)
      if (!contains(placed, x) && (pred[x] & ~placed) == 0) next = x;
    if (next < 0) return {};
    order.push_back(next);
    placed |= singleton(next);
  }
  return order;
}

// Ordered incomparable pairs: bit 2e is "x before y" for pair e = (x, y),
// bit 2e + 1 is "y before x". Nine elements give at most 72 bits.
using PairMask = std::bitset<2 * 36>;

struct CoverSearch {
  const Poset& p;
  const std::vector<Edge>& pairs;
  const std::vector<std::vector<int>>& extensions;
  const std::vector<PairMask>& masks;
  PairMask all;
  std::vector<std::vector<int>> chosen;

  // An extension containing every ordered pair in `need`, if any.
  std::optional<std::vector<int>> completing(const PairMask& need) const {
    const int n = p.size();
    std::vector<VertexSet> succ(n);
    for (int x = 0; x < n; ++x) succ[x] = p.above(x);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      auto [x, y] = pairs[e];
      if (need[2 * e] && need[2 * e + 1]) return std::nullopt;
      if (need[2 * e]) succ[x] |= singleton(y);
      if (need[2 * e + 1]) succ[y] |= singleton(x);
    }
    auto order = topological(n, succ);
    if (order.empty()) return std::nullopt;
    return order;
  }

  bool search(const PairMask& covered, int left) {
    const PairMask need = all & ~covered;
    if (need.none()) return true;
    if (left == 1) {
      auto last = completing(need);
      if (!last) return false;
      chosen.push_back(std::move(*last));
      return true;
    }
    std::size_t bit = 0;
    while (!need[bit]) ++bit;
    for (std::size_t i = 0; i < extensions.size(); ++i) {
      if (!masks[i][bit]) continue;
      chosen.push_back(extensions[i]);
      if (search(covered | masks[i], left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::vector<std::vector<int>> linear_extensions(const Poset& p) {
  if (p.size() > kMaxDimensionElements)
    throw TooLarge("linear-extension enumeration is limited to 9 elements");
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  extend_all(p, prefix, 0, out);
  return out;
}

bool is_realizer(const Poset& p, const std::vector<std::vector<int>>& extensions) {
  const int n = p.size();
  std::vector<std::vector<int>> position;
  for (const auto& ext : extensions) {
    if (static_cast<int>(ext.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
      if (ext[i] < 0 || ext[i] >= n || pos[ext[i]] >= 0) return false;
      pos[ext[i]] = i;
    }
    position.push_back(std::move(pos));
  }
  if (extensions.empty()) return n <= 1;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      bool before_everywhere = true;
      for (const auto& pos : position) before_everywhere &= pos[x] < pos[y];
      if (before_everywhere != p.less(x, y)) return false;
    }
  }
  return true;
}

Realizer minimum_realizer(const Poset& p, int cap) {
  if (p.size() > kMaxDimensionElements)
    throw TooLarge("dimension search is limited to 9 elements");
  const auto pairs = p.incomparable_pairs();
  const auto extensions = linear_extensions(p);
  if (pairs.empty()) {
    if (cap < 1) throw CapExceeded("dimension exceeds cap");
    return {1, {extensions.front()}};
  }

  std::vector<PairMask> masks;
  masks.reserve(extensions.size());
  for (const auto& ext : extensions) {
    std::vector<int> pos(p.size());
    for (int i = 0; i < p.size(); ++i) pos[ext[i]] = i;
    PairMask m;
    for (std::size_t e = 0; e < pairs.size(); ++e)
      m.set(pos[pairs[e].first] < pos[pairs[e].second] ? 2 * e : 2 * e + 1);
    masks.push_back(m);
  }
  PairMask all;
  for (std::size_t b = 0; b < 2 * pairs.size(); ++b) all.set(b);

  for (int t = 2; t <= cap; ++t) {
    CoverSearch search{p, pairs, extensions, masks, all, {}};
    if (search.search(PairMask{}, t)) return {t, std::move(search.chosen)};
  }
  throw CapExceeded("dimension exceeds cap " + std::to_string(cap));
}

int dimension(const Poset& p, int cap) { return minimum_realizer(p, cap).dimension; }

}  // namespace splitword
